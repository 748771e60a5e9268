// Generated by crates/core/oracle/golden.py (mpmath, 60 digits). Do not edit.

/// (x, e^x K0(x), e^x K1(x), e^-x I0(x), e^-x I1(x))
pub const BESSEL_SCALED: &[(f64, f64, f64, f64, f64)] = &[
    (1e-6_f64, 1.393145600507545876321521e+1, 1.00000099999328427191413e+6, 9.999990000007499995833335e-1, 4.999995000003124998541667e-7),
    (1e-3_f64, 7.030716002378251518480614, 1.000996734559068452432314e+3, 9.990007495835155593950468e-1, 4.995003123542213369838205e-4),
    (0.1_f64, 2.682326102262894383081103, 1.08901826830496965742031e+1, 9.071009257823010964357263e-1, 4.529844680880932500710551e-2),
    (0.5_f64, 1.524109385773909530022915, 2.731009708211785705359153, 6.450352704491500681079966e-1, 1.564208031848716971426455e-1),
    (1_f64, 1.144463079806895014699041, 1.636153486263258246513311, 4.657596075936404365019015e-1, 2.079104153497084488693547e-1),
    (1.5_f64, 9.582100532948964964167549e-1, 1.243165873552552994800264, 3.674336090541583392382415e-1, 2.190393874209256721151101e-1),
    (1.9999_f64, 8.415874065986028320204553e-1, 1.033509331487225254826579, 3.085176468512347353376069e-1, 2.1527072872092073382736e-1),
    (2_f64, 8.415682150707714179191249e-1, 1.033476847068688573175357, 3.085083225536710395333843e-1, 2.152692892489376591585051e-1),
    (2.0001_f64, 8.415490248721516013264942e-1, 1.033444365528781378135628, 3.084989990445415647561615e-1, 2.152678495986716436492228e-1),
    (3_f64, 6.977615980438517760550033e-1, 8.06563480128786903325774e-1, 2.430003541618253984726128e-1, 1.968267132973008536307448e-1),
    (5_f64, 5.478075643135189868682016e-1, 6.002738587883125829360457e-1, 1.835408126093283530736508e-1, 1.639722669445423569261229e-1),
    (7.5_f64, 4.50523699104915686378263e-1, 4.796689337910206155398864e-1, 1.483158300773955028383829e-1, 1.380412115485542024896089e-1),
    (10_f64, 3.916319344365986657339211e-1, 4.107665705957887511300469e-1, 1.278333371634286073230503e-1, 1.21262681384455518718955e-1),
    (15_f64, 3.210023535057762435171369e-1, 3.315348949666290797034644e-1, 1.038995314488227214309936e-1, 1.003741750451666552917077e-1),
    (19.9_f64, 2.792354994072369162460131e-1, 2.861674400863206477756817e-1, 9.000858886438959403767315e-2, 8.771710213170609807450562e-2),
    (20_f64, 2.785448766571822239331638e-1, 2.854254969407264451735292e-1, 8.978031188482602159594465e-2, 8.750622218328866535633007e-2),
    (20.1_f64, 2.778593543408199724922758e-1, 2.846892845281589562077571e-1, 8.955376362061344724260486e-2, 8.729685184320159495049239e-2),
    (30_f64, 2.278866656162537304224901e-1, 2.316541293777118022735876e-1, 7.314594648223729392892342e-2, 7.191633059864755470612874e-2),
    (50_f64, 1.768071558574293381117621e-1, 1.785665585588155746006057e-1, 5.656162664745419252993919e-2, 5.599312389289539964387871e-2),
    (100_f64, 1.251756216591265788915581e-1, 1.257999504795785293251039e-1, 3.994437929909668264755871e-2, 3.974415302513025267363893e-2),
    (700_f64, 4.736236945461357211203137e-2, 4.739618765349454413734997e-2, 1.508129565153135758698617e-2, 1.507051944471684694925775e-2),
    (1000_f64, 3.962832160075421711472592e-2, 3.964813081296021048014593e-2, 1.261724045589125658571613e-2, 1.261093025692862947023756e-2),
    (1e5_f64, 3.963322343474755860614238e-3, 3.963342160036932200507659e-3, 1.26156783797677676689762e-3, 1.261561530121817127340632e-3),
    (1e6_f64, 1.253313980651321210328836e-3, 1.253314607308154871898524e-3, 3.98942330269245778777341e-4, 3.989421307980307763133001e-4),
];

pub const K0_AT_1: f64 = 4.210244382407083333356274e-1;
pub const K1_AT_1: f64 = 6.0190723019723457473754e-1;

/// (alpha, R, k, lambda) for the disk exterior.
pub const DISK_LAMBDA: &[(f64, f64, f64, f64)] = &[
    (-0.25_f64, 0.25_f64, 5.054715286489750957197728e-7, -2.555014662747316509560083e-13),
    (-0.25_f64, 1_f64, 2.065705007504843092766074e-2, -4.267137178030583858207356e-4),
    (-0.25_f64, 4_f64, 1.487616816124460732212545e-1, -2.213003791616277612357601e-2),
    (-1_f64, 0.25_f64, 8.262820030019372371064296e-2, -6.827419484848934173131769e-3),
    (-1_f64, 1_f64, 5.950467264497842928850182e-1, -3.540806066586044179772162e-1),
    (-1_f64, 4_f64, 8.820676380084407248602178e-1, -7.780433180217896244809916e-1),
    (-4_f64, 0.25_f64, 2.380186905799137171540073, -5.66528970653767068763546),
    (-4_f64, 1_f64, 3.528270552033762899440871, -1.244869308834863399169587e+1),
    (-4_f64, 4_f64, 3.876896778682099866752721, -1.503032863255564283584096e+1),
    (-16_f64, 0.25_f64, 1.411308220813505159776348e+1, -1.991790894135781438671339e+2),
    (-16_f64, 1_f64, 1.550758711472839946701088e+1, -2.404852581208902853734554e+2),
    (-16_f64, 4_f64, 1.58754845460993743268746e+1, -2.520310095734400572971436e+2),
    (-0.5_f64, 2_f64, 2.975233632248921464425091e-1, -8.852015166465110449430406e-2),
    (-2_f64, 0.5_f64, 1.190093452899568585770036, -1.416322426634417671908865),
    (-1_f64, 100_f64, 9.950124383429848572924501e-1, -9.900497524572522422209243e-1),
];

/// (alpha, R, lambda) for the ball exterior, from radial shooting.
pub const BALL_SHOOTING: &[(f64, f64, f64)] = &[
    (-2.0, 1.0, -0.999999999999968),
    (-3.0, 0.5, -0.9999999999999467),
    (-5.0, 2.0, -20.249999999999936),
    (-1.5, 1.0, -0.24999999999998568),
    (-10.0, 0.25, -35.999999999999254),
];

/// (a, b, perimeter, area) for ellipses.
pub const ELLIPSE: &[(f64, f64, f64, f64)] = &[
    (2_f64, 1_f64, 9.688448220547676198428503, 6.283185307179586476925287),
    (1.5_f64, 1_f64, 7.932719794645294895665832, 4.712388980384689857693965),
    (3_f64, 1_f64, 1.33648932205552582301295e+1, 9.42477796076937971538793),
    (1_f64, 1_f64, 6.283185307179586476925287, 3.141592653589793238462643),
];

/// Reduced 3D bound for the spherocylinder r=1, L=4, alpha=-2
/// (uniform mesh n=20000 with Richardson against n=10000, T=40).
pub const SPHEROCYLINDER_REDUCED: f64 = -1.837346021150531;
pub const SPHEROCYLINDER_REDUCED_N20000: f64 = -1.837340983637338;
