//! Witherden-Vincent symmetric rules on the unit reference tetrahedron
//! `{x, y, z >= 0, x + y + z <= 1}`. Rows are `[x, y, z, weight]` with weights
//! summing to 1/6. Degree 4 has no dedicated rule; the degree-5 rule covers it.

#![allow(clippy::excessive_precision)]

pub(super) const DEGREE_1: [[f64; 4]; 1] = [
    [0.25, 0.25, 0.25, 0.166666666666666666667],
];

pub(super) const DEGREE_2: [[f64; 4]; 4] = [
    [0.13819660112501051518, 0.13819660112501051518, 0.585410196624968454461, 0.0416666666666666666667],
    [0.13819660112501051518, 0.585410196624968454461, 0.13819660112501051518, 0.0416666666666666666667],
    [0.585410196624968454461, 0.13819660112501051518, 0.13819660112501051518, 0.0416666666666666666667],
    [0.13819660112501051518, 0.13819660112501051518, 0.13819660112501051518, 0.0416666666666666666667],
];

pub(super) const DEGREE_3: [[f64; 4]; 8] = [
    [0.32816330251638168679, 0.32816330251638168679, 0.0155100924508549396311, 0.0227029737561812261779],
    [0.32816330251638168679, 0.0155100924508549396311, 0.32816330251638168679, 0.0227029737561812261779],
    [0.0155100924508549396311, 0.32816330251638168679, 0.32816330251638168679, 0.0227029737561812261779],
    [0.32816330251638168679, 0.32816330251638168679, 0.32816330251638168679, 0.0227029737561812261779],
    [0.108047249898428604118, 0.108047249898428604118, 0.675858250304714187647, 0.0189636929104854404887],
    [0.108047249898428604118, 0.675858250304714187647, 0.108047249898428604118, 0.0189636929104854404887],
    [0.675858250304714187647, 0.108047249898428604118, 0.108047249898428604118, 0.0189636929104854404887],
    [0.108047249898428604118, 0.108047249898428604118, 0.108047249898428604118, 0.0189636929104854404887],
];

pub(super) const DEGREE_5: [[f64; 4]; 14] = [
    [0.310885919263300609797, 0.310885919263300609797, 0.067342242210098170608, 0.0187813209530026417999],
    [0.310885919263300609797, 0.067342242210098170608, 0.310885919263300609797, 0.0187813209530026417999],
    [0.067342242210098170608, 0.310885919263300609797, 0.310885919263300609797, 0.0187813209530026417999],
    [0.310885919263300609797, 0.310885919263300609797, 0.310885919263300609797, 0.0187813209530026417999],
    [0.0927352503108912264023, 0.0927352503108912264023, 0.721794249067326320793, 0.0122488405193936582573],
    [0.0927352503108912264023, 0.721794249067326320793, 0.0927352503108912264023, 0.0122488405193936582573],
    [0.721794249067326320793, 0.0927352503108912264023, 0.0927352503108912264023, 0.0122488405193936582573],
    [0.0927352503108912264023, 0.0927352503108912264023, 0.0927352503108912264023, 0.0122488405193936582573],
    [0.0455037041256496494919, 0.454496295874350350508, 0.454496295874350350508, 0.00709100346284691107301],
    [0.454496295874350350508, 0.0455037041256496494919, 0.454496295874350350508, 0.00709100346284691107301],
    [0.0455037041256496494919, 0.0455037041256496494919, 0.454496295874350350508, 0.00709100346284691107301],
    [0.0455037041256496494919, 0.454496295874350350508, 0.0455037041256496494919, 0.00709100346284691107301],
    [0.454496295874350350508, 0.0455037041256496494919, 0.0455037041256496494919, 0.00709100346284691107301],
    [0.454496295874350350508, 0.454496295874350350508, 0.0455037041256496494919, 0.00709100346284691107301],
];

pub(super) const DEGREE_6: [[f64; 4]; 24] = [
    [0.0406739585346113531156, 0.0406739585346113531156, 0.877978124396165940653, 0.00167953517588677382467],
    [0.0406739585346113531156, 0.877978124396165940653, 0.0406739585346113531156, 0.00167953517588677382467],
    [0.877978124396165940653, 0.0406739585346113531156, 0.0406739585346113531156, 0.00167953517588677382467],
    [0.0406739585346113531156, 0.0406739585346113531156, 0.0406739585346113531156, 0.00167953517588677382467],
    [0.322337890142275510344, 0.322337890142275510344, 0.032986329573173468968, 0.00922619692394245368253],
    [0.322337890142275510344, 0.032986329573173468968, 0.322337890142275510344, 0.00922619692394245368253],
    [0.032986329573173468968, 0.322337890142275510344, 0.322337890142275510344, 0.00922619692394245368253],
    [0.322337890142275510344, 0.322337890142275510344, 0.322337890142275510344, 0.00922619692394245368253],
    [0.214602871259152029289, 0.214602871259152029289, 0.356191386222543912133, 0.00665379170969458201662],
    [0.214602871259152029289, 0.356191386222543912133, 0.214602871259152029289, 0.00665379170969458201662],
    [0.356191386222543912133, 0.214602871259152029289, 0.214602871259152029289, 0.00665379170969458201662],
    [0.214602871259152029289, 0.214602871259152029289, 0.214602871259152029289, 0.00665379170969458201662],
    [0.603005664791649141367, 0.0636610018750175252992, 0.269672331458315808034, 0.00803571428571428571429],
    [0.603005664791649141367, 0.0636610018750175252992, 0.0636610018750175252992, 0.00803571428571428571429],
    [0.0636610018750175252992, 0.0636610018750175252992, 0.603005664791649141367, 0.00803571428571428571429],
    [0.269672331458315808034, 0.603005664791649141367, 0.0636610018750175252992, 0.00803571428571428571429],
    [0.0636610018750175252992, 0.269672331458315808034, 0.603005664791649141367, 0.00803571428571428571429],
    [0.0636610018750175252992, 0.603005664791649141367, 0.0636610018750175252992, 0.00803571428571428571429],
    [0.269672331458315808034, 0.0636610018750175252992, 0.603005664791649141367, 0.00803571428571428571429],
    [0.0636610018750175252992, 0.269672331458315808034, 0.0636610018750175252992, 0.00803571428571428571429],
    [0.0636610018750175252992, 0.0636610018750175252992, 0.269672331458315808034, 0.00803571428571428571429],
    [0.0636610018750175252992, 0.603005664791649141367, 0.269672331458315808034, 0.00803571428571428571429],
    [0.269672331458315808034, 0.0636610018750175252992, 0.0636610018750175252992, 0.00803571428571428571429],
    [0.603005664791649141367, 0.269672331458315808034, 0.0636610018750175252992, 0.00803571428571428571429],
];

pub(super) const DEGREE_7: [[f64; 4]; 35] = [
    [0.25, 0.25, 0.25, 0.0159142149106884748101],
    [0.315701149778202799423, 0.315701149778202799423, 0.0528965506653916017297, 0.00705493020166117151271],
    [0.315701149778202799423, 0.0528965506653916017297, 0.315701149778202799423, 0.00705493020166117151271],
    [0.0528965506653916017297, 0.315701149778202799423, 0.315701149778202799423, 0.00705493020166117151271],
    [0.315701149778202799423, 0.315701149778202799423, 0.315701149778202799423, 0.00705493020166117151271],
    [0.0504898225983963687631, 0.449510177401603631237, 0.449510177401603631237, 0.00531615463880959665571],
    [0.449510177401603631237, 0.0504898225983963687631, 0.449510177401603631237, 0.00531615463880959665571],
    [0.0504898225983963687631, 0.0504898225983963687631, 0.449510177401603631237, 0.00531615463880959665571],
    [0.0504898225983963687631, 0.449510177401603631237, 0.0504898225983963687631, 0.00531615463880959665571],
    [0.449510177401603631237, 0.0504898225983963687631, 0.0504898225983963687631, 0.00531615463880959665571],
    [0.449510177401603631237, 0.449510177401603631237, 0.0504898225983963687631, 0.00531615463880959665571],
    [0.575171637587000023483, 0.188833831026001047736, 0.0471607003609978810439, 0.00620118845472243689494],
    [0.575171637587000023483, 0.188833831026001047736, 0.188833831026001047736, 0.00620118845472243689494],
    [0.188833831026001047736, 0.188833831026001047736, 0.575171637587000023483, 0.00620118845472243689494],
    [0.0471607003609978810439, 0.575171637587000023483, 0.188833831026001047736, 0.00620118845472243689494],
    [0.188833831026001047736, 0.0471607003609978810439, 0.575171637587000023483, 0.00620118845472243689494],
    [0.188833831026001047736, 0.575171637587000023483, 0.188833831026001047736, 0.00620118845472243689494],
    [0.0471607003609978810439, 0.188833831026001047736, 0.575171637587000023483, 0.00620118845472243689494],
    [0.188833831026001047736, 0.0471607003609978810439, 0.188833831026001047736, 0.00620118845472243689494],
    [0.188833831026001047736, 0.188833831026001047736, 0.0471607003609978810439, 0.00620118845472243689494],
    [0.188833831026001047736, 0.575171637587000023483, 0.0471607003609978810439, 0.00620118845472243689494],
    [0.0471607003609978810439, 0.188833831026001047736, 0.188833831026001047736, 0.00620118845472243689494],
    [0.575171637587000023483, 0.0471607003609978810439, 0.188833831026001047736, 0.00620118845472243689494],
    [0.810830241098548561118, 0.0212654725414832459888, 0.146638813818484946904, 0.00135179513831722359435],
    [0.810830241098548561118, 0.0212654725414832459888, 0.0212654725414832459888, 0.00135179513831722359435],
    [0.0212654725414832459888, 0.0212654725414832459888, 0.810830241098548561118, 0.00135179513831722359435],
    [0.146638813818484946904, 0.810830241098548561118, 0.0212654725414832459888, 0.00135179513831722359435],
    [0.0212654725414832459888, 0.146638813818484946904, 0.810830241098548561118, 0.00135179513831722359435],
    [0.0212654725414832459888, 0.810830241098548561118, 0.0212654725414832459888, 0.00135179513831722359435],
    [0.146638813818484946904, 0.0212654725414832459888, 0.810830241098548561118, 0.00135179513831722359435],
    [0.0212654725414832459888, 0.146638813818484946904, 0.0212654725414832459888, 0.00135179513831722359435],
    [0.0212654725414832459888, 0.0212654725414832459888, 0.146638813818484946904, 0.00135179513831722359435],
    [0.0212654725414832459888, 0.810830241098548561118, 0.146638813818484946904, 0.00135179513831722359435],
    [0.146638813818484946904, 0.0212654725414832459888, 0.0212654725414832459888, 0.00135179513831722359435],
    [0.810830241098548561118, 0.146638813818484946904, 0.0212654725414832459888, 0.00135179513831722359435],
];

pub(super) const DEGREE_8: [[f64; 4]; 46] = [
    [0.107952724962210848482, 0.107952724962210848482, 0.676141825113367454553, 0.00440444181806813856739],
    [0.107952724962210848482, 0.676141825113367454553, 0.107952724962210848482, 0.00440444181806813856739],
    [0.676141825113367454553, 0.107952724962210848482, 0.107952724962210848482, 0.00440444181806813856739],
    [0.107952724962210848482, 0.107952724962210848482, 0.107952724962210848482, 0.00440444181806813856739],
    [0.185109487782586570277, 0.185109487782586570277, 0.444671536652240289169, 0.00867195792728975545248],
    [0.185109487782586570277, 0.444671536652240289169, 0.185109487782586570277, 0.00867195792728975545248],
    [0.444671536652240289169, 0.185109487782586570277, 0.185109487782586570277, 0.00867195792728975545248],
    [0.185109487782586570277, 0.185109487782586570277, 0.185109487782586570277, 0.00867195792728975545248],
    [0.0423165436847672816241, 0.0423165436847672816241, 0.873050368945698155128, 0.00125420935892336663012],
    [0.0423165436847672816241, 0.873050368945698155128, 0.0423165436847672816241, 0.00125420935892336663012],
    [0.873050368945698155128, 0.0423165436847672816241, 0.0423165436847672816241, 0.00125420935892336663012],
    [0.0423165436847672816241, 0.0423165436847672816241, 0.0423165436847672816241, 0.00125420935892336663012],
    [0.314181709124038995363, 0.314181709124038995363, 0.05745487262788301391, 0.0069606304761558162845],
    [0.314181709124038995363, 0.05745487262788301391, 0.314181709124038995363, 0.0069606304761558162845],
    [0.05745487262788301391, 0.314181709124038995363, 0.314181709124038995363, 0.0069606304761558162845],
    [0.314181709124038995363, 0.314181709124038995363, 0.314181709124038995363, 0.0069606304761558162845],
    [0.435591328583830205228, 0.0644086714161697947719, 0.0644086714161697947719, 0.00604682171021813716687],
    [0.0644086714161697947719, 0.435591328583830205228, 0.0644086714161697947719, 0.00604682171021813716687],
    [0.435591328583830205228, 0.435591328583830205228, 0.0644086714161697947719, 0.00604682171021813716687],
    [0.435591328583830205228, 0.0644086714161697947719, 0.435591328583830205228, 0.00604682171021813716687],
    [0.0644086714161697947719, 0.435591328583830205228, 0.435591328583830205228, 0.00604682171021813716687],
    [0.0644086714161697947719, 0.0644086714161697947719, 0.435591328583830205228, 0.00604682171021813716687],
    [0.71746406342630832329, 0.0214339301271305748445, 0.239668076319430527021, 0.0011928171484740721917],
    [0.71746406342630832329, 0.0214339301271305748445, 0.0214339301271305748445, 0.0011928171484740721917],
    [0.0214339301271305748445, 0.0214339301271305748445, 0.71746406342630832329, 0.0011928171484740721917],
    [0.239668076319430527021, 0.71746406342630832329, 0.0214339301271305748445, 0.0011928171484740721917],
    [0.0214339301271305748445, 0.239668076319430527021, 0.71746406342630832329, 0.0011928171484740721917],
    [0.0214339301271305748445, 0.71746406342630832329, 0.0214339301271305748445, 0.0011928171484740721917],
    [0.239668076319430527021, 0.0214339301271305748445, 0.71746406342630832329, 0.0011928171484740721917],
    [0.0214339301271305748445, 0.239668076319430527021, 0.0214339301271305748445, 0.0011928171484740721917],
    [0.0214339301271305748445, 0.0214339301271305748445, 0.239668076319430527021, 0.0011928171484740721917],
    [0.0214339301271305748445, 0.71746406342630832329, 0.239668076319430527021, 0.0011928171484740721917],
    [0.239668076319430527021, 0.0214339301271305748445, 0.0214339301271305748445, 0.0011928171484740721917],
    [0.71746406342630832329, 0.239668076319430527021, 0.0214339301271305748445, 0.0011928171484740721917],
    [0.583797378302144405927, 0.20413933387602912043, 0.00792395394579735321275, 0.00257558102516005580226],
    [0.583797378302144405927, 0.20413933387602912043, 0.20413933387602912043, 0.00257558102516005580226],
    [0.20413933387602912043, 0.20413933387602912043, 0.583797378302144405927, 0.00257558102516005580226],
    [0.00792395394579735321275, 0.583797378302144405927, 0.20413933387602912043, 0.00257558102516005580226],
    [0.20413933387602912043, 0.00792395394579735321275, 0.583797378302144405927, 0.00257558102516005580226],
    [0.20413933387602912043, 0.583797378302144405927, 0.20413933387602912043, 0.00257558102516005580226],
    [0.00792395394579735321275, 0.20413933387602912043, 0.583797378302144405927, 0.00257558102516005580226],
    [0.20413933387602912043, 0.00792395394579735321275, 0.20413933387602912043, 0.00257558102516005580226],
    [0.20413933387602912043, 0.20413933387602912043, 0.00792395394579735321275, 0.00257558102516005580226],
    [0.20413933387602912043, 0.583797378302144405927, 0.00792395394579735321275, 0.00257558102516005580226],
    [0.00792395394579735321275, 0.20413933387602912043, 0.20413933387602912043, 0.00257558102516005580226],
    [0.583797378302144405927, 0.00792395394579735321275, 0.20413933387602912043, 0.00257558102516005580226],
];

pub(super) const DEGREE_9: [[f64; 4]; 59] = [
    [0.25, 0.25, 0.25, 0.00966842481874670955593],
    [6.19816994454650842354e-10, 6.19816994454650842354e-10, 0.999999998140549016636, 0.0000107198802932093982607],
    [6.19816994454650842354e-10, 0.999999998140549016636, 6.19816994454650842354e-10, 0.0000107198802932093982607],
    [0.999999998140549016636, 6.19816994454650842354e-10, 6.19816994454650842354e-10, 0.0000107198802932093982607],
    [6.19816994454650842354e-10, 6.19816994454650842354e-10, 6.19816994454650842354e-10, 0.0000107198802932093982607],
    [0.160774535395261594152, 0.160774535395261594152, 0.517676393814215217544, 0.00386222307707090966382],
    [0.160774535395261594152, 0.517676393814215217544, 0.160774535395261594152, 0.00386222307707090966382],
    [0.517676393814215217544, 0.160774535395261594152, 0.160774535395261594152, 0.00386222307707090966382],
    [0.160774535395261594152, 0.160774535395261594152, 0.160774535395261594152, 0.00386222307707090966382],
    [0.322276521821420974204, 0.322276521821420974204, 0.0331704345357370773878, 0.00492715205590488094046],
    [0.322276521821420974204, 0.0331704345357370773878, 0.322276521821420974204, 0.00492715205590488094046],
    [0.0331704345357370773878, 0.322276521821420974204, 0.322276521821420974204, 0.00492715205590488094046],
    [0.322276521821420974204, 0.322276521821420974204, 0.322276521821420974204, 0.00492715205590488094046],
    [0.045108918345413582961, 0.045108918345413582961, 0.864673244963759251117, 0.00134399666326936379429],
    [0.045108918345413582961, 0.864673244963759251117, 0.045108918345413582961, 0.00134399666326936379429],
    [0.864673244963759251117, 0.045108918345413582961, 0.045108918345413582961, 0.00134399666326936379429],
    [0.045108918345413582961, 0.045108918345413582961, 0.045108918345413582961, 0.00134399666326936379429],
    [0.112296546004376045328, 0.387703453995623954672, 0.387703453995623954672, 0.00635568001728374425861],
    [0.387703453995623954672, 0.112296546004376045328, 0.387703453995623954672, 0.00635568001728374425861],
    [0.112296546004376045328, 0.112296546004376045328, 0.387703453995623954672, 0.00635568001728374425861],
    [0.112296546004376045328, 0.387703453995623954672, 0.112296546004376045328, 0.00635568001728374425861],
    [0.387703453995623954672, 0.112296546004376045328, 0.112296546004376045328, 0.00635568001728374425861],
    [0.387703453995623954672, 0.387703453995623954672, 0.112296546004376045328, 0.00635568001728374425861],
    [0.00255457923304133096764, 0.458871448752459273272, 0.0797025232620401224888, 0.00139740369971642536595],
    [0.00255457923304133096764, 0.458871448752459273272, 0.458871448752459273272, 0.00139740369971642536595],
    [0.458871448752459273272, 0.458871448752459273272, 0.00255457923304133096764, 0.00139740369971642536595],
    [0.0797025232620401224888, 0.00255457923304133096764, 0.458871448752459273272, 0.00139740369971642536595],
    [0.458871448752459273272, 0.0797025232620401224888, 0.00255457923304133096764, 0.00139740369971642536595],
    [0.458871448752459273272, 0.00255457923304133096764, 0.458871448752459273272, 0.00139740369971642536595],
    [0.0797025232620401224888, 0.458871448752459273272, 0.00255457923304133096764, 0.00139740369971642536595],
    [0.458871448752459273272, 0.0797025232620401224888, 0.458871448752459273272, 0.00139740369971642536595],
    [0.458871448752459273272, 0.458871448752459273272, 0.0797025232620401224888, 0.00139740369971642536595],
    [0.458871448752459273272, 0.00255457923304133096764, 0.0797025232620401224888, 0.00139740369971642536595],
    [0.0797025232620401224888, 0.458871448752459273272, 0.458871448752459273272, 0.00139740369971642536595],
    [0.00255457923304133096764, 0.0797025232620401224888, 0.458871448752459273272, 0.00139740369971642536595],
    [0.718350326442074509057, 0.0337758706853385779055, 0.214097932187248335132, 0.00170575989212422132506],
    [0.718350326442074509057, 0.0337758706853385779055, 0.0337758706853385779055, 0.00170575989212422132506],
    [0.0337758706853385779055, 0.0337758706853385779055, 0.718350326442074509057, 0.00170575989212422132506],
    [0.214097932187248335132, 0.718350326442074509057, 0.0337758706853385779055, 0.00170575989212422132506],
    [0.0337758706853385779055, 0.214097932187248335132, 0.718350326442074509057, 0.00170575989212422132506],
    [0.0337758706853385779055, 0.718350326442074509057, 0.0337758706853385779055, 0.00170575989212422132506],
    [0.214097932187248335132, 0.0337758706853385779055, 0.718350326442074509057, 0.00170575989212422132506],
    [0.0337758706853385779055, 0.214097932187248335132, 0.0337758706853385779055, 0.00170575989212422132506],
    [0.0337758706853385779055, 0.0337758706853385779055, 0.214097932187248335132, 0.00170575989212422132506],
    [0.0337758706853385779055, 0.718350326442074509057, 0.214097932187248335132, 0.00170575989212422132506],
    [0.214097932187248335132, 0.0337758706853385779055, 0.0337758706853385779055, 0.00170575989212422132506],
    [0.718350326442074509057, 0.214097932187248335132, 0.0337758706853385779055, 0.00170575989212422132506],
    [0.0344159105781752700892, 0.183641369809927889789, 0.598301349801968950333, 0.00342081932799802300664],
    [0.0344159105781752700892, 0.183641369809927889789, 0.183641369809927889789, 0.00342081932799802300664],
    [0.183641369809927889789, 0.183641369809927889789, 0.0344159105781752700892, 0.00342081932799802300664],
    [0.598301349801968950333, 0.0344159105781752700892, 0.183641369809927889789, 0.00342081932799802300664],
    [0.183641369809927889789, 0.598301349801968950333, 0.0344159105781752700892, 0.00342081932799802300664],
    [0.183641369809927889789, 0.0344159105781752700892, 0.183641369809927889789, 0.00342081932799802300664],
    [0.598301349801968950333, 0.183641369809927889789, 0.0344159105781752700892, 0.00342081932799802300664],
    [0.183641369809927889789, 0.598301349801968950333, 0.183641369809927889789, 0.00342081932799802300664],
    [0.183641369809927889789, 0.183641369809927889789, 0.598301349801968950333, 0.00342081932799802300664],
    [0.183641369809927889789, 0.0344159105781752700892, 0.598301349801968950333, 0.00342081932799802300664],
    [0.598301349801968950333, 0.183641369809927889789, 0.183641369809927889789, 0.00342081932799802300664],
    [0.0344159105781752700892, 0.598301349801968950333, 0.183641369809927889789, 0.00342081932799802300664],
];

pub(super) const DEGREE_10: [[f64; 4]; 81] = [
    [0.25, 0.25, 0.25, 0.00789996225933678973079],
    [0.31225006869518864773, 0.31225006869518864773, 0.0632497939144340568106, 0.00448950999871144996713],
    [0.31225006869518864773, 0.0632497939144340568106, 0.31225006869518864773, 0.00448950999871144996713],
    [0.0632497939144340568106, 0.31225006869518864773, 0.31225006869518864773, 0.00448950999871144996713],
    [0.31225006869518864773, 0.31225006869518864773, 0.31225006869518864773, 0.00448950999871144996713],
    [0.114309653857346150587, 0.114309653857346150587, 0.657071038427961548238, 0.00164485995279889720576],
    [0.114309653857346150587, 0.657071038427961548238, 0.114309653857346150587, 0.00164485995279889720576],
    [0.657071038427961548238, 0.114309653857346150587, 0.114309653857346150587, 0.00164485995279889720576],
    [0.114309653857346150587, 0.114309653857346150587, 0.114309653857346150587, 0.00164485995279889720576],
    [0.165486025619611051604, 0.410430739218965494288, 0.0136524959424579598197, 0.00189898020336587193727],
    [0.165486025619611051604, 0.410430739218965494288, 0.410430739218965494288, 0.00189898020336587193727],
    [0.410430739218965494288, 0.410430739218965494288, 0.165486025619611051604, 0.00189898020336587193727],
    [0.0136524959424579598197, 0.165486025619611051604, 0.410430739218965494288, 0.00189898020336587193727],
    [0.410430739218965494288, 0.0136524959424579598197, 0.165486025619611051604, 0.00189898020336587193727],
    [0.410430739218965494288, 0.165486025619611051604, 0.410430739218965494288, 0.00189898020336587193727],
    [0.0136524959424579598197, 0.410430739218965494288, 0.165486025619611051604, 0.00189898020336587193727],
    [0.410430739218965494288, 0.0136524959424579598197, 0.410430739218965494288, 0.00189898020336587193727],
    [0.410430739218965494288, 0.410430739218965494288, 0.0136524959424579598197, 0.00189898020336587193727],
    [0.410430739218965494288, 0.165486025619611051604, 0.0136524959424579598197, 0.00189898020336587193727],
    [0.0136524959424579598197, 0.410430739218965494288, 0.410430739218965494288, 0.00189898020336587193727],
    [0.165486025619611051604, 0.0136524959424579598197, 0.410430739218965494288, 0.00189898020336587193727],
    [0.942988767345204866198, 0.00613800882479074784759, 0.0447352150052136381072, 0.00006032405738987560404],
    [0.942988767345204866198, 0.00613800882479074784759, 0.00613800882479074784759, 0.00006032405738987560404],
    [0.00613800882479074784759, 0.00613800882479074784759, 0.942988767345204866198, 0.00006032405738987560404],
    [0.0447352150052136381072, 0.942988767345204866198, 0.00613800882479074784759, 0.00006032405738987560404],
    [0.00613800882479074784759, 0.0447352150052136381072, 0.942988767345204866198, 0.00006032405738987560404],
    [0.00613800882479074784759, 0.942988767345204866198, 0.00613800882479074784759, 0.00006032405738987560404],
    [0.0447352150052136381072, 0.00613800882479074784759, 0.942988767345204866198, 0.00006032405738987560404],
    [0.00613800882479074784759, 0.0447352150052136381072, 0.00613800882479074784759, 0.00006032405738987560404],
    [0.00613800882479074784759, 0.00613800882479074784759, 0.0447352150052136381072, 0.00006032405738987560404],
    [0.00613800882479074784759, 0.942988767345204866198, 0.0447352150052136381072, 0.00006032405738987560404],
    [0.0447352150052136381072, 0.00613800882479074784759, 0.00613800882479074784759, 0.00006032405738987560404],
    [0.942988767345204866198, 0.0447352150052136381072, 0.00613800882479074784759, 0.00006032405738987560404],
    [0.477190379904280350544, 0.121050181145589425994, 0.280709257804540797468, 0.00428995533007601187984],
    [0.477190379904280350544, 0.121050181145589425994, 0.121050181145589425994, 0.00428995533007601187984],
    [0.121050181145589425994, 0.121050181145589425994, 0.477190379904280350544, 0.00428995533007601187984],
    [0.280709257804540797468, 0.477190379904280350544, 0.121050181145589425994, 0.00428995533007601187984],
    [0.121050181145589425994, 0.280709257804540797468, 0.477190379904280350544, 0.00428995533007601187984],
    [0.121050181145589425994, 0.477190379904280350544, 0.121050181145589425994, 0.00428995533007601187984],
    [0.280709257804540797468, 0.121050181145589425994, 0.477190379904280350544, 0.00428995533007601187984],
    [0.121050181145589425994, 0.280709257804540797468, 0.121050181145589425994, 0.00428995533007601187984],
    [0.121050181145589425994, 0.121050181145589425994, 0.280709257804540797468, 0.00428995533007601187984],
    [0.121050181145589425994, 0.477190379904280350544, 0.280709257804540797468, 0.00428995533007601187984],
    [0.280709257804540797468, 0.121050181145589425994, 0.121050181145589425994, 0.00428995533007601187984],
    [0.477190379904280350544, 0.280709257804540797468, 0.121050181145589425994, 0.00428995533007601187984],
    [0.594256269480007025662, 0.0327794682164426707747, 0.340184794087107632789, 0.00168931194662596546475],
    [0.594256269480007025662, 0.0327794682164426707747, 0.0327794682164426707747, 0.00168931194662596546475],
    [0.0327794682164426707747, 0.0327794682164426707747, 0.594256269480007025662, 0.00168931194662596546475],
    [0.340184794087107632789, 0.594256269480007025662, 0.0327794682164426707747, 0.00168931194662596546475],
    [0.0327794682164426707747, 0.340184794087107632789, 0.594256269480007025662, 0.00168931194662596546475],
    [0.0327794682164426707747, 0.594256269480007025662, 0.0327794682164426707747, 0.00168931194662596546475],
    [0.340184794087107632789, 0.0327794682164426707747, 0.594256269480007025662, 0.00168931194662596546475],
    [0.0327794682164426707747, 0.340184794087107632789, 0.0327794682164426707747, 0.00168931194662596546475],
    [0.0327794682164426707747, 0.0327794682164426707747, 0.340184794087107632789, 0.00168931194662596546475],
    [0.0327794682164426707747, 0.594256269480007025662, 0.340184794087107632789, 0.00168931194662596546475],
    [0.340184794087107632789, 0.0327794682164426707747, 0.0327794682164426707747, 0.00168931194662596546475],
    [0.594256269480007025662, 0.340184794087107632789, 0.0327794682164426707747, 0.00168931194662596546475],
    [0.801177284658344391231, 0.0324852815648230478355, 0.133852152212009513098, 0.00109602454617265069458],
    [0.801177284658344391231, 0.0324852815648230478355, 0.0324852815648230478355, 0.00109602454617265069458],
    [0.0324852815648230478355, 0.0324852815648230478355, 0.801177284658344391231, 0.00109602454617265069458],
    [0.133852152212009513098, 0.801177284658344391231, 0.0324852815648230478355, 0.00109602454617265069458],
    [0.0324852815648230478355, 0.133852152212009513098, 0.801177284658344391231, 0.00109602454617265069458],
    [0.0324852815648230478355, 0.801177284658344391231, 0.0324852815648230478355, 0.00109602454617265069458],
    [0.133852152212009513098, 0.0324852815648230478355, 0.801177284658344391231, 0.00109602454617265069458],
    [0.0324852815648230478355, 0.133852152212009513098, 0.0324852815648230478355, 0.00109602454617265069458],
    [0.0324852815648230478355, 0.0324852815648230478355, 0.133852152212009513098, 0.00109602454617265069458],
    [0.0324852815648230478355, 0.801177284658344391231, 0.133852152212009513098, 0.00109602454617265069458],
    [0.133852152212009513098, 0.0324852815648230478355, 0.0324852815648230478355, 0.00109602454617265069458],
    [0.801177284658344391231, 0.133852152212009513098, 0.0324852815648230478355, 0.00109602454617265069458],
    [0.628071845475366010693, 0.174979342183939024285, 0.0219694701567559407368, 0.00215117263314366510655],
    [0.628071845475366010693, 0.174979342183939024285, 0.174979342183939024285, 0.00215117263314366510655],
    [0.174979342183939024285, 0.174979342183939024285, 0.628071845475366010693, 0.00215117263314366510655],
    [0.0219694701567559407368, 0.628071845475366010693, 0.174979342183939024285, 0.00215117263314366510655],
    [0.174979342183939024285, 0.0219694701567559407368, 0.628071845475366010693, 0.00215117263314366510655],
    [0.174979342183939024285, 0.628071845475366010693, 0.174979342183939024285, 0.00215117263314366510655],
    [0.0219694701567559407368, 0.174979342183939024285, 0.628071845475366010693, 0.00215117263314366510655],
    [0.174979342183939024285, 0.0219694701567559407368, 0.174979342183939024285, 0.00215117263314366510655],
    [0.174979342183939024285, 0.174979342183939024285, 0.0219694701567559407368, 0.00215117263314366510655],
    [0.174979342183939024285, 0.628071845475366010693, 0.0219694701567559407368, 0.00215117263314366510655],
    [0.0219694701567559407368, 0.174979342183939024285, 0.174979342183939024285, 0.00215117263314366510655],
    [0.628071845475366010693, 0.0219694701567559407368, 0.174979342183939024285, 0.00215117263314366510655],
];

