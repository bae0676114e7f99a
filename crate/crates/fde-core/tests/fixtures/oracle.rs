// @generated by gen_fixtures.py (mpmath, 50 significant digits)
#![allow(dead_code, clippy::excessive_precision)]

pub const GAMMA_TABLE: [(f64, f64); 7] = [
    (0.1, 9.5135076986687318363),
    (0.5, 1.7724538509055160273),
    (1.8, 0.93138377098024269891),
    (2.8, 1.676490787764436858),
    (7.3, 1271.4236336639092731),
    (23.5, 5361303587544414733400.0),
    (49.9, 411801103425305804190000000000000000000000000000000000000000000.0),
];
pub const ML_0P8_AT_M2: f64 = 0.1897966923637056596;
pub const EXACT_Y_AT_T1: f64 = 0.3795933847274113192;
pub const ML_TABLE: [(f64, f64, f64); 13] = [
    (0.8, -0.5, 0.60302371586280370036),
    (0.8, -6.0, 0.045741376541625765135),
    (0.8, -10.5, 0.023556475429512024371),
    (0.8, -25.0, 0.0091709970964705318073),
    (0.8, -50.0, 0.0044677761579029932956),
    (0.5, -3.0, 0.17900115118138995042),
    (0.5, -9.5, 0.059064678352563890854),
    (0.5, -20.0, 0.028174348741051319319),
    (0.9, -12.0, 0.010275288049933647198),
    (0.3, -4.0, 0.16650174431551664824),
    (0.8, 3.0, 64.751787985702524737),
    (0.8, 10.0, 66050994.88409599744),
    (0.5, 2.0, 108.94090438997797241),
];
pub const FLAWED_Y0: f64 = 2.0;
pub const FLAWED_Y1: f64 = 1.5925455694741567486;
pub const FLAWED_STEP_N1: f64 = 1.3774927273684664436;
pub const RECT_0P8: [f64; 5] = [1.0736712740308343279, 0.79569899077398584263, 0.71627140119300549607, 0.66912100807189622336, 0.63611285039263301247];
pub const TRAP_0P8: [f64; 5] = [0.5964840411282412933, 0.88410998974887315848, 0.75173067378057258087, 0.69107846105642994517, 0.65177845985970910681];
pub const TRAP_START_0P8: [f64; 5] = [0.47718723290259303464, 0.38877623392770571879, 0.35331696134013863399, 0.33135950835560491218, 0.31569389888852881783];
pub const CLAIMED_BOUND_N0: f64 = 9.5081088501221729053e-6;
