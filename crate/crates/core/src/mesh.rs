//! Conforming tetrahedral meshes: construction, file I/O and quality metrics.
//!
//! Tets are stored with positive signed volume. Local face `k` of a tet is the
//! face opposite local vertex `k`, listed with outward orientation.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::Vec3;

/// Relative volume threshold below which a tet is treated as degenerate.
pub const DEGENERATE_VOLUME_FACTOR: f64 = 1e-14;

/// Vertex triples of the four faces, outward for a positively oriented tet.
pub const LOCAL_FACES: [[usize; 3]; 4] = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]];

/// Vertex pairs of the six edges, in the order dihedral angles are reported.
pub const LOCAL_EDGES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

#[derive(Debug, thiserror::Error)]
pub enum MeshError {
    #[error("number of subdivisions must be at least 1")]
    ZeroSubdivisions,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("tet {tet} references vertex {vertex} but the mesh has {num_vertices} vertices")]
    IndexOutOfRange {
        tet: usize,
        vertex: usize,
        num_vertices: usize,
    },
    #[error("tet {tet} repeats a vertex index")]
    RepeatedVertex { tet: usize },
    #[error("tet {tet} has zero volume ({volume:e})")]
    ZeroVolume { tet: usize, volume: f64 },
    #[error("face {face:?} is shared by {count} tets")]
    NonConforming { face: [usize; 3], count: usize },
    #[error("mesh has no tetrahedra")]
    Empty,
    #[error("degenerate tetrahedron")]
    DegenerateTet,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A face with multiplicity one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryFace {
    pub tet: usize,
    pub local_face: usize,
    pub vertices: [usize; 3],
}

/// Conforming tetrahedral mesh with positively oriented elements.
#[derive(Debug, Clone, PartialEq)]
pub struct TetMesh {
    vertices: Vec<Vec3>,
    tets: Vec<[usize; 4]>,
    boundary_faces: Vec<BoundaryFace>,
    on_boundary: Vec<bool>,
}

impl TetMesh {
    /// Validates and canonicalizes a mesh. Negatively oriented tets are fixed by
    /// swapping their last two indices.
    pub fn new(vertices: Vec<Vec3>, mut tets: Vec<[usize; 4]>) -> Result<Self, MeshError> {
        let nv = vertices.len();
        for (t, tet) in tets.iter_mut().enumerate() {
            for &v in tet.iter() {
                if v >= nv {
                    return Err(MeshError::IndexOutOfRange {
                        tet: t,
                        vertex: v,
                        num_vertices: nv,
                    });
                }
            }
            for a in 0..4 {
                for b in a + 1..4 {
                    if tet[a] == tet[b] {
                        return Err(MeshError::RepeatedVertex { tet: t });
                    }
                }
            }
            let pts = tet.map(|v| vertices[v]);
            let volume = signed_volume(&pts);
            if is_degenerate_volume(volume, &pts) {
                return Err(MeshError::ZeroVolume { tet: t, volume });
            }
            if volume < 0.0 {
                tet.swap(2, 3);
            }
        }

        let mut faces: HashMap<[usize; 3], (usize, usize, usize)> = HashMap::new();
        for (t, tet) in tets.iter().enumerate() {
            for (f, local) in LOCAL_FACES.iter().enumerate() {
                let mut key = local.map(|i| tet[i]);
                key.sort_unstable();
                let entry = faces.entry(key).or_insert((0, t, f));
                entry.0 += 1;
            }
        }
        if let Some((face, (count, _, _))) = faces.iter().find(|(_, (c, _, _))| *c > 2) {
            return Err(MeshError::NonConforming {
                face: *face,
                count: *count,
            });
        }

        // Deterministic order: by tet, then by local face.
        let mut boundary_faces = Vec::new();
        let mut on_boundary = vec![false; nv];
        for (t, tet) in tets.iter().enumerate() {
            for (f, local) in LOCAL_FACES.iter().enumerate() {
                let verts = local.map(|i| tet[i]);
                let mut key = verts;
                key.sort_unstable();
                if faces[&key].0 == 1 {
                    for &v in &verts {
                        on_boundary[v] = true;
                    }
                    boundary_faces.push(BoundaryFace {
                        tet: t,
                        local_face: f,
                        vertices: verts,
                    });
                }
            }
        }

        Ok(Self {
            vertices,
            tets,
            boundary_faces,
            on_boundary,
        })
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn tets(&self) -> &[[usize; 4]] {
        &self.tets
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_tets(&self) -> usize {
        self.tets.len()
    }

    /// Corner coordinates of tet `t`.
    pub fn tet_points(&self, t: usize) -> [Vec3; 4] {
        self.tets[t].map(|v| self.vertices[v])
    }

    pub fn tet_volume(&self, t: usize) -> f64 {
        signed_volume(&self.tet_points(t))
    }

    pub fn total_volume(&self) -> f64 {
        (0..self.num_tets()).map(|t| self.tet_volume(t)).sum()
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        self.on_boundary[v]
    }

    /// Indices of vertices lying on a boundary face, ascending.
    pub fn boundary_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.on_boundary
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v))
    }

    /// Faces with multiplicity one, ordered by tet and local face.
    pub fn boundary_faces(&self) -> &[BoundaryFace] {
        &self.boundary_faces
    }

    /// Reads the whitespace-separated text format (`NV NT`, vertex lines, tet lines).
    pub fn load<R: BufRead>(reader: R) -> Result<Self, MeshError> {
        let mut lines = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            lines.push((i + 1, trimmed.to_string()));
        }
        let mut it = lines.into_iter();
        let (hl, header) = it.next().ok_or(MeshError::Parse {
            line: 1,
            message: "missing `NV NT` header".into(),
        })?;
        let counts: Vec<usize> = parse_fields(hl, &header, 2)?;
        let (nv, nt) = (counts[0], counts[1]);

        let mut vertices = Vec::with_capacity(nv);
        for _ in 0..nv {
            let (ln, line) = it.next().ok_or(MeshError::Parse {
                line: hl,
                message: format!("expected {nv} vertex lines"),
            })?;
            let xyz: Vec<f64> = parse_fields(ln, &line, 3)?;
            vertices.push(Vec3::new(xyz[0], xyz[1], xyz[2]));
        }
        let mut tets = Vec::with_capacity(nt);
        for _ in 0..nt {
            let (ln, line) = it.next().ok_or(MeshError::Parse {
                line: hl,
                message: format!("expected {nt} tet lines"),
            })?;
            let idx: Vec<usize> = parse_fields(ln, &line, 4)?;
            tets.push([idx[0], idx[1], idx[2], idx[3]]);
        }
        if let Some((ln, _)) = it.next() {
            return Err(MeshError::Parse {
                line: ln,
                message: "trailing data after tet list".into(),
            });
        }
        Self::new(vertices, tets)
    }

    /// Writes the text format with 17 significant digits per coordinate.
    pub fn save<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{} {}", self.num_vertices(), self.num_tets())?;
        for p in &self.vertices {
            writeln!(w, "{:.16e} {:.16e} {:.16e}", p.x, p.y, p.z)?;
        }
        for t in &self.tets {
            writeln!(w, "{} {} {} {}", t[0], t[1], t[2], t[3])?;
        }
        Ok(())
    }
}

fn parse_fields<T: std::str::FromStr>(
    line_no: usize,
    line: &str,
    expected: usize,
) -> Result<Vec<T>, MeshError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != expected {
        return Err(MeshError::Parse {
            line: line_no,
            message: format!("expected {expected} fields, found {}", fields.len()),
        });
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<T>().map_err(|_| MeshError::Parse {
                line: line_no,
                message: format!("cannot parse `{f}`"),
            })
        })
        .collect()
}

/// Kuhn subdivision of the unit cube: `n` cells per axis, six tets per cell,
/// every tet containing the cell diagonal from its lowest to highest corner.
pub fn generate_structured_cube_mesh(n: usize) -> Result<TetMesh, MeshError> {
    if n == 0 {
        return Err(MeshError::ZeroSubdivisions);
    }
    let m = n + 1;
    let index = |i: usize, j: usize, k: usize| i + m * (j + m * k);
    let step = 1.0 / n as f64;
    let mut vertices = Vec::with_capacity(m * m * m);
    for k in 0..m {
        for j in 0..m {
            for i in 0..m {
                vertices.push(Vec3::new(
                    i as f64 * step,
                    j as f64 * step,
                    k as f64 * step,
                ));
            }
        }
    }

    const AXIS_ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut tets = Vec::with_capacity(6 * n * n * n);
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                for order in AXIS_ORDERS {
                    let mut corner = [i, j, k];
                    let mut tet = [index(i, j, k); 4];
                    for (step_no, &axis) in order.iter().enumerate() {
                        corner[axis] += 1;
                        tet[step_no + 1] = index(corner[0], corner[1], corner[2]);
                    }
                    tets.push(tet);
                }
            }
        }
    }
    TetMesh::new(vertices, tets)
}

/// Signed volume; positive when `p1-p0, p2-p0, p3-p0` is right-handed.
pub fn signed_volume(p: &[Vec3; 4]) -> f64 {
    (p[1] - p[0]).cross(&(p[2] - p[0])).dot(&(p[3] - p[0])) / 6.0
}

pub fn max_edge_length(p: &[Vec3; 4]) -> f64 {
    LOCAL_EDGES
        .iter()
        .map(|&[a, b]| (p[a] - p[b]).norm())
        .fold(0.0, f64::max)
}

/// Scale-aware degeneracy test: `|V| < 1e-14 * (longest edge)^3`.
pub fn is_degenerate_volume(volume: f64, p: &[Vec3; 4]) -> bool {
    let l = max_edge_length(p);
    volume.abs() < DEGENERATE_VOLUME_FACTOR * l * l * l
}

/// Longest edge over all tets.
pub fn mesh_spacing(mesh: &TetMesh) -> Result<f64, MeshError> {
    if mesh.num_tets() == 0 {
        return Err(MeshError::Empty);
    }
    Ok((0..mesh.num_tets())
        .map(|t| max_edge_length(&mesh.tet_points(t)))
        .fold(0.0, f64::max))
}

fn triangle_area(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    0.5 * (b - a).cross(&(c - a)).norm()
}

/// Shape ratio `3r/R`: 1 for the regular tet, 0 for a degenerate one.
///
/// The circumradius uses the products `a, b, c` of opposite edge lengths:
/// `R = sqrt((a+b+c)(a+b-c)(a-b+c)(-a+b+c)) / (24 V)`.
pub fn shape_ratio(p: &[Vec3; 4]) -> f64 {
    // canonical vertex order makes the result bitwise permutation invariant
    let mut sorted = *p;
    sorted.sort_by(|u, v| {
        u.x.total_cmp(&v.x)
            .then(u.y.total_cmp(&v.y))
            .then(u.z.total_cmp(&v.z))
    });
    let p = &sorted;
    let volume = signed_volume(p).abs();
    if is_degenerate_volume(volume, p) {
        return 0.0;
    }
    let area_sum: f64 = LOCAL_FACES
        .iter()
        .map(|f| triangle_area(&p[f[0]], &p[f[1]], &p[f[2]]))
        .sum();
    let inradius = 3.0 * volume / area_sum;

    let len = |i: usize, j: usize| (p[i] - p[j]).norm();
    let a = len(0, 1) * len(2, 3);
    let b = len(0, 2) * len(1, 3);
    let c = len(0, 3) * len(1, 2);
    let heron = (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
    let circumradius = heron.max(0.0).sqrt() / (24.0 * volume);
    (3.0 * inradius / circumradius).clamp(0.0, 1.0)
}

/// Interior dihedral angles in degrees, one per edge in [`LOCAL_EDGES`] order.
pub fn dihedral_angles(p: &[Vec3; 4]) -> Result<[f64; 6], MeshError> {
    let volume = signed_volume(p);
    if is_degenerate_volume(volume, p) {
        return Err(MeshError::DegenerateTet);
    }
    // Unit inward normal of the face opposite each vertex.
    let inward: [Vec3; 4] = std::array::from_fn(|k| {
        let [a, b, c] = LOCAL_FACES[k].map(|i| p[i]);
        let n = (b - a).cross(&(c - a));
        let n = if n.dot(&(p[k] - a)) < 0.0 { -n } else { n };
        n.normalize()
    });
    let mut angles = [0.0; 6];
    for (e, &[i, j]) in LOCAL_EDGES.iter().enumerate() {
        let (k, l) = other_two(i, j);
        let cos = (-inward[k].dot(&inward[l])).clamp(-1.0, 1.0);
        angles[e] = cos.acos().to_degrees();
    }
    Ok(angles)
}

fn other_two(i: usize, j: usize) -> (usize, usize) {
    let mut rest = (0..4).filter(|&v| v != i && v != j);
    (rest.next().unwrap(), rest.next().unwrap())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub min: f64,
    pub mean: f64,
    pub max: f64,
}

impl Stats {
    fn from_values(values: impl Iterator<Item = f64>) -> Self {
        let (mut min, mut max, mut sum, mut count) = (f64::INFINITY, f64::NEG_INFINITY, 0.0, 0usize);
        for v in values {
            min = min.min(v);
            max = max.max(v);
            sum += v;
            count += 1;
        }
        let mean = (sum / count as f64).clamp(min, max);
        Self { min, mean, max }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshQualityReport {
    pub h: f64,
    pub num_vertices: usize,
    pub num_tets: usize,
    pub shape_ratio: Stats,
    pub dihedral_deg: Stats,
}

/// Shape-ratio statistics over tets and dihedral statistics pooled over all
/// six angles of every tet.
pub fn quality_report(mesh: &TetMesh) -> Result<MeshQualityReport, MeshError> {
    let h = mesh_spacing(mesh)?;
    let per_tet: Vec<(f64, [f64; 6])> = (0..mesh.num_tets())
        .into_par_iter()
        .map(|t| {
            let p = mesh.tet_points(t);
            Ok((shape_ratio(&p), dihedral_angles(&p)?))
        })
        .collect::<Result<_, MeshError>>()?;
    Ok(MeshQualityReport {
        h,
        num_vertices: mesh.num_vertices(),
        num_tets: mesh.num_tets(),
        shape_ratio: Stats::from_values(per_tet.iter().map(|(s, _)| *s)),
        dihedral_deg: Stats::from_values(per_tet.iter().flat_map(|(_, d)| d.iter().copied())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regular_tet() -> [Vec3; 4] {
        [
            Vec3::new(1.0, 1.0, 1.0),
            Vec3::new(1.0, -1.0, -1.0),
            Vec3::new(-1.0, 1.0, -1.0),
            Vec3::new(-1.0, -1.0, 1.0),
        ]
        .map(|p| p / (8.0f64).sqrt())
    }

    fn trirectangular() -> [Vec3; 4] {
        [Vec3::zeros(), Vec3::x(), Vec3::y(), Vec3::z()]
    }

    #[test]
    fn structured_counts() {
        let m = generate_structured_cube_mesh(1).unwrap();
        assert_eq!((m.num_vertices(), m.num_tets()), (8, 6));
        assert!((m.total_volume() - 1.0).abs() < 1e-12);
        assert_eq!(m.boundary_faces().len(), 12);

        let m = generate_structured_cube_mesh(2).unwrap();
        assert_eq!((m.num_vertices(), m.num_tets()), (27, 48));
        assert_eq!(m.boundary_faces().len(), 48);
        // only the centre vertex is interior
        assert_eq!(m.boundary_vertices().count(), 26);
        assert!(!m.is_boundary_vertex(13));
    }

    #[test]
    fn zero_subdivisions_rejected() {
        assert!(matches!(
            generate_structured_cube_mesh(0),
            Err(MeshError::ZeroSubdivisions)
        ));
    }

    #[test]
    fn spacing_of_structured_meshes() {
        let m1 = generate_structured_cube_mesh(1).unwrap();
        assert_eq!(mesh_spacing(&m1).unwrap(), 3f64.sqrt());
        let m4 = generate_structured_cube_mesh(4).unwrap();
        assert!((mesh_spacing(&m4).unwrap() - 3f64.sqrt() / 4.0).abs() < 1e-15);
    }

    #[test]
    fn spacing_of_single_regular_tet() {
        let m = TetMesh::new(regular_tet().to_vec(), vec![[0, 1, 2, 3]]).unwrap();
        assert!((mesh_spacing(&m).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(m.boundary_faces().len(), 4);
    }

    #[test]
    fn empty_mesh_has_no_spacing() {
        let m = TetMesh::new(vec![], vec![]).unwrap();
        assert!(matches!(mesh_spacing(&m), Err(MeshError::Empty)));
        assert!(matches!(quality_report(&m), Err(MeshError::Empty)));
    }

    #[test]
    fn shape_ratio_reference_values() {
        assert!((shape_ratio(&regular_tet()) - 1.0).abs() < 1e-12);
        assert!((shape_ratio(&trirectangular()) - (3f64.sqrt() - 1.0)).abs() < 1e-12);
        let flat = [Vec3::zeros(), Vec3::x(), Vec3::y(), Vec3::new(1.0, 1.0, 0.0)];
        assert_eq!(shape_ratio(&flat), 0.0);
    }

    #[test]
    fn dihedral_reference_values() {
        let expected = (1.0f64 / 3.0).acos().to_degrees();
        for a in dihedral_angles(&regular_tet()).unwrap() {
            assert!((a - expected).abs() < 1e-9);
        }
        let d = dihedral_angles(&trirectangular()).unwrap();
        for a in &d[..3] {
            assert!((a - 90.0).abs() < 1e-12);
        }
        let flat = [Vec3::zeros(), Vec3::x(), Vec3::y(), Vec3::new(1.0, 1.0, 0.0)];
        assert!(matches!(dihedral_angles(&flat), Err(MeshError::DegenerateTet)));
    }

    #[test]
    fn sliver_has_extreme_dihedral() {
        // four nearly coplanar points forming a square-ish sliver
        let eps = 1e-4;
        let p = [
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(1.0, 1.0, 0.0),
            Vec3::new(1.0, 0.0, eps),
            Vec3::new(0.0, 1.0, eps),
        ];
        let d = dihedral_angles(&p).unwrap();
        let extreme = d.iter().any(|&a| a < 1.0 || a > 179.0);
        assert!(extreme, "{d:?}");
    }

    #[test]
    fn load_rejects_five_index_tet() {
        let text = "4 1\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 1 2 3 0\n";
        match TetMesh::load(text.as_bytes()) {
            Err(MeshError::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn load_reorients_negative_tet() {
        let text = "# comment\n4 1\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 2 1 3\n";
        let m = TetMesh::load(text.as_bytes()).unwrap();
        assert!(m.tet_volume(0) > 0.0);
        assert!((m.tet_volume(0) - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn load_rejects_zero_volume_and_bad_index() {
        let flat = "4 1\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n0 1 2 3\n";
        assert!(matches!(
            TetMesh::load(flat.as_bytes()),
            Err(MeshError::ZeroVolume { .. })
        ));
        let bad = "4 1\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 1 2 9\n";
        assert!(matches!(
            TetMesh::load(bad.as_bytes()),
            Err(MeshError::IndexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn load_rejects_face_shared_three_times() {
        let text = "6 3\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 0 -1\n1 1 1\n0 1 2 3\n0 1 2 4\n0 1 2 5\n";
        assert!(matches!(
            TetMesh::load(text.as_bytes()),
            Err(MeshError::NonConforming { count: 3, .. })
        ));
    }

    #[test]
    fn save_load_round_trip() {
        let m = generate_structured_cube_mesh(2).unwrap();
        let mut buf = Vec::new();
        m.save(&mut buf).unwrap();
        assert!(String::from_utf8_lossy(&buf).starts_with("27 48\n"));
        let back = TetMesh::load(buf.as_slice()).unwrap();
        assert_eq!(back.vertices(), m.vertices());
        assert_eq!(back.tets(), m.tets());
    }

    #[test]
    fn structured_quality_is_uniform() {
        for n in [1, 3] {
            let r = quality_report(&generate_structured_cube_mesh(n).unwrap()).unwrap();
            assert!(r.shape_ratio.max - r.shape_ratio.min < 1e-12);
            assert!(r.dihedral_deg.min <= r.dihedral_deg.mean);
            assert!(r.dihedral_deg.mean <= r.dihedral_deg.max);
        }
    }

    #[test]
    fn quality_of_single_regular_tet() {
        let m = TetMesh::new(regular_tet().to_vec(), vec![[0, 1, 2, 3]]).unwrap();
        let r = quality_report(&m).unwrap();
        let expected = (1.0f64 / 3.0).acos().to_degrees();
        assert!((r.shape_ratio.min - 1.0).abs() < 1e-12);
        assert!((r.shape_ratio.max - 1.0).abs() < 1e-12);
        assert!((r.dihedral_deg.mean - expected).abs() < 1e-9);
        let json = serde_json::to_value(&r).unwrap();
        for key in ["h", "num_vertices", "num_tets", "shape_ratio", "dihedral_deg"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert!(json["dihedral_deg"].get("mean").is_some());
    }

    #[test]
    fn boundary_faces_lie_on_cube_planes() {
        let m = generate_structured_cube_mesh(3).unwrap();
        assert_eq!(m.boundary_faces().len(), 12 * 9);
        for f in m.boundary_faces() {
            let pts = f.vertices.map(|v| m.vertices()[v]);
            let on_plane = (0..3).any(|axis| {
                pts.iter().all(|p| p[axis] == 0.0) || pts.iter().all(|p| p[axis] == 1.0)
            });
            assert!(on_plane);
        }
    }
}
