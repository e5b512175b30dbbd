//! Generated by `tests/oracles/rs_coeffs.py` (mpmath, 80 digits). Do not edit.
//!
//! `C0`..`C4` are the Riemann–Siegel correction functions as power series in
//! z = 2p − 1; `BERNOULLI_OVER_FACTORIAL[k-1]` is B₂ₖ/(2k)!.

#![allow(clippy::excessive_precision)]

pub const C0: [f64; 43] = [
    0.38268343236508977173,
    0.0,
    0.43724046807752044936,
    0.0,
    0.13237657548034352332,
    0.0,
    -0.013605026047674188655,
    0.0,
    -0.013567621970103580888,
    0.0,
    -0.0016237253231444652829,
    0.0,
    0.00029705353733379690783,
    0.0,
    0.00007943300879521469588,
    0.0,
    0.00000046556124614504505037,
    0.0,
    -0.0000014327251630955105754,
    0.0,
    -0.00000010354847112312946075,
    0.0,
    0.000000012357927083861738056,
    0.0,
    0.0000000017881083857954904986,
    0.0,
    -0.000000000033914143899270359069,
    0.0,
    -0.000000000016326633902565905101,
    0.0,
    -0.00000000000037851093185412203829,
    0.0,
    0.000000000000093274232592017248457,
    0.0,
    0.0000000000000052218430159781368553,
    0.0,
    -0.00000000000000033506730727442637895,
    0.0,
    -0.000000000000000034124265228117264941,
    0.0,
    0.00000000000000000057512033414323991603,
    0.0,
    0.00000000000000000014895301363211505455,
];
pub const C1: [f64; 44] = [
    0.0,
    -0.02682510262837534703,
    0.0,
    0.01378477342635185305,
    0.0,
    0.038491250482235082229,
    0.0,
    0.009871066299062076472,
    0.0,
    -0.0033107597608584043329,
    0.0,
    -0.0014647808577954150825,
    0.0,
    -0.000013207940624876963675,
    0.0,
    0.000059227487018471413232,
    0.0,
    0.0000059802425853734485877,
    0.0,
    -0.00000096413224561698263527,
    0.0,
    -0.0000001833473372271441176,
    0.0,
    0.0000000044670875627178335996,
    0.0,
    0.0000000027096350821772743217,
    0.0,
    0.000000000077852886543158510463,
    0.0,
    -0.000000000023437626010893688532,
    0.0,
    -0.0000000000015830172789987521642,
    0.0,
    0.00000000000012119941573723791247,
    0.0,
    0.000000000000014583781161108307018,
    0.0,
    -0.00000000000000028786305258131917505,
    0.0,
    -0.000000000000000086628629021237241225,
    0.0,
    -0.00000000000000000084307227271370412716,
    0.0,
    0.00000000000000000036308072230973462002,
];
pub const C2: [f64; 45] = [
    0.0051885428302931684938,
    0.0,
    0.00030946583880634746033,
    0.0,
    -0.011335941078229373382,
    0.0,
    0.0022330457419581447721,
    0.0,
    0.0051966374088623302051,
    0.0,
    0.00034399144076208336695,
    0.0,
    -0.00059106484274705828217,
    0.0,
    -0.00010229972547935857454,
    0.0,
    0.000020888392216992755408,
    0.0,
    0.0000059276654930965359579,
    0.0,
    -0.00000016423838362436275978,
    0.0,
    -0.00000015161199700940682862,
    0.0,
    -0.0000000059078036982066679629,
    0.0,
    0.0000000020911514859478188978,
    0.0,
    0.00000000017815649583292351054,
    0.0,
    -0.000000000016164072455353830753,
    0.0,
    -0.0000000000023806962496667615707,
    0.0,
    0.000000000000053982652955425949182,
    0.0,
    0.000000000000019750142196969515273,
    0.0,
    0.00000000000000023332868732882634831,
    0.0,
    -0.00000000000000011187517610048080208,
    0.0,
    -0.0000000000000000041640094888837671885,
    0.0,
    0.00000000000000000044460811092918830289,
];
pub const C3: [f64; 46] = [
    0.0,
    -0.0013397160907194569043,
    0.0,
    0.0037442151363793937047,
    0.0,
    -0.001330317891932146812,
    0.0,
    -0.0022654660765471787115,
    0.0,
    0.00095484999985067304151,
    0.0,
    0.00060100384589636039121,
    0.0,
    -0.00010128858286776621953,
    0.0,
    -0.000068657334492998256425,
    0.0,
    0.00000059853667915385981593,
    0.0,
    0.000003331659851239947129,
    0.0,
    0.00000021919289102435081057,
    0.0,
    -0.000000078908842456814944106,
    0.0,
    -0.0000000094146850812952621517,
    0.0,
    0.00000000095701162108834803019,
    0.0,
    0.00000000018763137453470662797,
    0.0,
    -0.0000000000044378376793233993275,
    0.0,
    -0.0000000000022426738505617353248,
    0.0,
    -0.000000000000036276868657352436894,
    0.0,
    0.000000000000017639809550821581608,
    0.0,
    0.00000000000000079607652467867777573,
    0.0,
    -0.000000000000000094196514905896907639,
    0.0,
    -0.0000000000000000071331038545696578246,
    0.0,
    0.00000000000000000032899105845546243212,
];
pub const C4: [f64; 47] = [
    0.00046483389361763381854,
    0.0,
    -0.001005660736534047076,
    0.0,
    0.00024044856573725793022,
    0.0,
    0.0010283086149702321878,
    0.0,
    -0.00076578610717556441866,
    0.0,
    -0.00020365286803084817621,
    0.0,
    0.00023212290491068727895,
    0.0,
    0.000032602144243865197608,
    0.0,
    -0.00002557906251794952514,
    0.0,
    -0.000004107464438915744754,
    0.0,
    0.0000011781113640371293881,
    0.0,
    0.00000024456561422484578542,
    0.0,
    -0.00000002391582476734432243,
    0.0,
    -0.0000000075052142070357552885,
    0.0,
    0.00000000013312279416258428193,
    0.0,
    0.00000000013440626754225619719,
    0.0,
    0.0000000000035137700424304859287,
    0.0,
    -0.0000000000015191544533703919336,
    0.0,
    -0.000000000000089154176814470873055,
    0.0,
    0.000000000000011195891165228535773,
    0.0,
    0.0000000000000010516013329914814964,
    0.0,
    -0.000000000000000051786552736466836615,
    0.0,
    -0.0000000000000000080658748619165660515,
    0.0,
    0.0000000000000000001060820453056396595,
];
pub const BERNOULLI_OVER_FACTORIAL: [f64; 30] = [
    0.083333333333333333333,
    -0.0013888888888888888889,
    0.000033068783068783068783,
    -8.2671957671957671958e-7,
    2.0876756987868098979e-8,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.174868698558061873e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523341e-19,
    3.5347070396294674717e-21,
    -8.9535174270375468504e-23,
    2.2679524523376830603e-24,
    -5.7447906688722024453e-26,
    1.4551724756148649019e-27,
    -3.6859949406653101782e-29,
    9.336734257095044672e-31,
    -2.3650224157006299346e-32,
    5.9906717624821343047e-34,
    -1.5174548844682902617e-35,
    3.8437581254541882322e-37,
    -9.7363530726466910353e-39,
    2.4662470442006809571e-40,
    -6.2470767418207436931e-42,
    1.5824030244644914298e-43,
    -4.0082736859489359685e-45,
    1.0153075855569556312e-46,
    -2.5718041582418717499e-48,
];
