// Golden reference values for the test suite.
// Generated by scripts/gen_reference_values.py (mpmath, 45+ digit working
// precision; Mittag-Leffler values cross-validated between an adaptive-
// precision Taylor route and the Gorenflo-Loutchko-Luchko integral route).
// Do not edit by hand; rerun the script instead.
#pragma once

namespace fracstokes::testing {

struct GammaRef { double x; double value; };
inline constexpr GammaRef kGammaSweep[] = {
    {0.001, 999.4237724845955},
    {0.01, 99.4325851191506},
    {0.05, 19.470085311255513},
    {0.1, 9.513507698668732},
    {0.17, 5.451174180104211},
    {0.25, 3.625609908221908},
    {0.3333333333333333, 2.678938534707748},
    {0.4, 2.218159543757688},
    {0.5, 1.772453850905516},
    {0.6, 1.489192248812817},
    {0.7, 1.2980553326475577},
    {0.75, 1.2254167024651776},
    {0.9, 1.0686287021193193},
    {1.0, 1.0},
    {1.1, 0.9513507698668732},
    {1.25, 0.906402477055477},
    {1.3, 0.8974706963062772},
    {1.4, 0.8872638175030753},
    {1.5, 0.886226925452758},
    {1.6, 0.8935153492876903},
    {1.75, 0.9190625268488832},
    {1.9, 0.9617658319073874},
    {2.5, 1.329340388179137},
    {3.7, 4.170651783796603},
    {5.0, 24.0},
    {6.3, 201.8132751847475},
    {8.0, 5040.0},
    {10.5, 1133278.3889487856},
    {12.0, 39916800.0},
    {15.3, 195066476387.01178},
    {20.0, 1.21645100408832e+17},
    {25.0, 6.204484017332394e+23},
    {33.3, 7.487577596522707e+35},
    {40.0, 2.0397882081197444e+46},
    {50.0, 6.082818640342675e+62},
    {60.0, 1.3868311854568984e+80},
    {71.5, 1.007556973953789e+101},
    {100.0, 9.332621544394415e+155},
    {140.5, 1.1367323214599712e+240},
    {170.0, 4.269068009004705e+304},
};

struct RGammaRef { double x; double value; };
inline constexpr RGammaRef kRGammaSweep[] = {
    {-0.5, -0.28209479177387814},
    {-1.5, 0.42314218766081724},
    {-2.3, -0.6910337159283098},
    {-7.7, 5492.267339992172},
    {-1.25, 0.25501529346820717},
    {-0.25, -0.20401223477456573},
    {-3.75, 3.7332080926042},
    {-12.4, -400822935.34325767},
    {0.0, 0.0},
    {-1.0, 0.0},
    {-6.0, 0.0},
};

// sqrt(pi) = Gamma(1/2)
inline constexpr double kSqrtPi = 1.772453850905516;
// 2/sqrt(pi) = 1/Gamma(1.5) = J^{1/2}[1](1)
inline constexpr double kTwoOverSqrtPi = 1.1283791670955126;
// pi^{1/4} = (Gamma(1/2)/Gamma(1))^{1/2}
inline constexpr double kPiQuarterRoot = 1.3313353638003897;
// cosh(1) = E_{2,1}(1)
inline constexpr double kCosh1 = 1.5430806348152437;
// e*erfc(1) = E_{1/2}(-1)
inline constexpr double kEErfc1 = 0.427583576155807;
// Gamma(1.3)/Gamma(1.9) = J^{0.6}[t^{0.3}](1)
inline constexpr double kGammaRatio_13_19 = 0.9331488669403037;
// 2/Gamma(2.5) = cD^{0.5}[t^2](1)
inline constexpr double kTwoOverGamma25 = 1.5045055561273502;
// Gamma(1.3)/Gamma(0.7) * 2^{-0.3} = D^{0.6}[t^{0.3}](2)
inline constexpr double kPowerRule_03_06_2 = 0.5615883278622918;
// (T^a/Gamma(a+1))^{1/p} at a=1/2, p=2, T=1
inline constexpr double kWeightedNormConst_05_2 = 1.0622519320271968;
// E_{0.6}(1)
inline constexpr double kE06_at1 = 4.248635002648374;
// ((q-p)/(aq-p))^{(q-p)/(pq)} T^{(aq-p)/(pq)} / Gamma(a)^{1/p} at a=0.6,p=1,q=2,T=1
inline constexpr double kEmbedLq_06_1_2 = 1.501530765609599;
// (a/(1-a))^{a/p} at a=0.5, p=2 (exactly 1)
inline constexpr double kLogCatalogL4_05_2 = 1.0;
// (a/(1-a))^{a/p} at a=0.6, p=2
inline constexpr double kLogCatalogLq_06_2 = 1.1293469354568555;
// ||t^{-0.2}||_{L^2_{0.6}(0,1.5)} = [Gamma(0.6)/Gamma(1.2) * 1.5^{0.2}]^{1/2}
inline constexpr double kLeftPowerNorm_06_2_15 = 1.3262434667773406;
// ||(T-t)^{-0.25}||_{L^2_{0.7}(0,2)} = [2^{0.2}/(0.2*Gamma(0.7))]^{1/2}
inline constexpr double kRightPowerNorm_07_2_2 = 2.103494587614742;
// log-family witness (a0=0.5,p0=2) in L^2_{0.7}(0,1): [e^{0.2} E_1(0.2)/Gamma(0.7)]^{1/2}
inline constexpr double kLogCatalogWeighted_07_05_2 = 1.0725906778845347;

// ||  |t-0.4|^{-0.2} restricted to (0.2,0.6)  ||_{L^2_{0.75}(0,1)}, by quadrature
inline constexpr double kShiftedPowerNorm_075_2_1 = 1.0870287267057828;

// || cos t ||_{L^2_{0.6}(0,1)}, by quadrature
inline constexpr double kWeightedNormCos_06_2_1 = 0.8353679366681511;

// (J^{0.4} cos)(1) on [0,1], by quadrature
inline constexpr double kJ04Cos_at1 = 0.8134094733558624;

struct MLRef { double alpha; double beta; double z; double value; };
inline constexpr MLRef kMLTable[] = {
    {0.3, 1.0, -2.0, 0.29023222616787536},
    {0.3, 1.0, -50.0, 0.015228201501814694},
    {0.4, 1.0, -3.0, 0.19625892833053848},
    {0.4, 1.0, -20.0, 0.03301089796175726},
    {0.5, 1.0, -1.0, 0.427583576155807},
    {0.5, 1.0, -5.0, 0.11070463773306863},
    {0.5, 1.0, -20.0, 0.02817434874105132},
    {0.5, 1.0, -50.0, 0.011281536265323773},
    {0.5, 1.0, 2.0, 108.94090438997797},
    {0.5, 1.0, 10.0, 5.376234283632271e+43},
    {0.5, 0.5, -10.0, 0.0027796561095304283},
    {0.5, 2.0, -5.0, 0.19010401892842527},
    {0.6, 1.0, 1.0, 4.248635002648374},
    {0.6, 1.0, -1.0, 0.4133273409431063},
    {0.6, 1.0, -30.0, 0.015211431482801456},
    {0.6, 0.6, -20.0, 0.0006997653179785391},
    {0.6, 2.0, -30.0, 0.0366227073831721},
    {0.75, 1.0, -1.0, 0.39310830281575404},
    {0.75, 1.0, -5.0, 0.06792397433264394},
    {0.75, 1.0, -30.0, 0.009516692693117128},
    {0.75, 1.0, -50.0, 0.0056311878629451305},
    {0.75, 0.75, -5.0, 0.012140520971468212},
    {0.75, 0.75, -40.0, 0.00013612330377760573},
    {0.75, 2.0, -20.0, 0.05372728814644896},
    {0.75, 1.75, -12.0, 0.08124285185780127},
    {0.85, 0.85, -40.0, 9.208504223430513e-05},
    {0.9, 1.0, -10.0, 0.012820606051102103},
    {0.9, 1.0, -35.0, 0.0031556079491116564},
    {0.9, 2.0, -35.0, 0.02984890175726051},
    {0.95, 1.0, -45.0, 0.0011910805056817996},
    {0.999, 1.0, -5.0, 0.007043956926684041},
    {0.97, 1.0, -40.0, 0.0008017575461809193},
    {0.98, 1.0, -45.0, 0.00047019631667303316},
    {0.999, 1.0, -49.0, 2.1307689236238752e-05},
    {0.55, 0.55, -35.0, 0.00023023629832202752},
    {0.45, 0.45, -18.0, 0.0008401043289163099},
    {0.9, 2.0, -45.0, 0.023248352816819164},
    {1.0, 1.0, -3.0, 0.049787068367863944},
    {1.0, 2.0, 1.0, 1.7182818284590453},
    {1.2, 1.5, 3.0, 6.310141809273592},
    {1.5, 1.0, -2.0, 0.02943068560282647},
    {2.0, 1.0, -4.0, -0.4161468365471424},
    {2.0, 1.0, 1.0, 1.5430806348152437},
    {0.6, 1.6, -8.0, 0.1176737821704585},
    {0.75, 1.0, 1.0, 3.485866220051744},
};

}  // namespace fracstokes::testing
