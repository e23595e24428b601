#pragma once

// Reference values computed independently (high-precision NumPy runs of the
// same formulas) against which the library implementations are pinned.

#include <array>

namespace oracle {

// --- Gaussian kernel weights, effective sample 10, focal index 5, sd 2 ---
inline constexpr int kKernelT = 10;
inline constexpr int kKernelS = 5;
inline constexpr double kKernelSd = 2.0;
inline constexpr std::array<double, 10> kKernelRho = {
    0.188787841136837, 0.452878487904543, 0.84608840423568,  1.231051364170928,
    1.394963948956094, 1.231051364170928, 0.84608840423568,  0.452878487904543,
    0.188787841136837, 0.06129043843233};
inline constexpr double kKernelSum = 6.8938665822844;
// boundary focal index 1
inline constexpr double kKernelBoundarySum = 3.977985933525407;
inline constexpr std::array<double, 3> kKernelBoundaryFirst3 = {
    1.32307384852622, 1.167608573215069, 0.802484854195141};

// --- Literal 20x2 panel for prior/posterior checks ---
inline constexpr int kPanelT = 20;
inline constexpr int kPanelN = 2;
inline constexpr double kPanel[20][2] = {
    {0, 0},
    {0.40021443706710547, 0.75150326026339542},
    {-0.11804899516260775, -0.19292853309035274},
    {0.55309972260351614, 0.51665676773085201},
    {0.10410551544548574, -0.78552073828500624},
    {-0.038882289555517119, 1.4050235261713351},
    {-1.1321551598276374, -0.25348602363536349},
    {-0.495207597677983, 2.4457610003600285},
    {-1.0688090750001593, 1.8572436900448892},
    {1.1180261496290056, -0.15019437447696349},
    {0.26602209403267074, 0.18389264850295048},
    {1.0567561786534694, -1.7298910518936983},
    {-1.4444857639454751, 0.80224121570019613},
    {-0.078818148324981685, -0.13716203702121027},
    {-0.38768586675956701, 0.048561932835429096},
    {-0.46544821881187681, 0.68740125836251886},
    {-0.59513551761464001, -1.1848977007592474},
    {0.97040616732990925, 0.13624412241807921},
    {-0.43311403000693471, 1.7336708808087797},
    {-1.32828819231641, -0.02533828111627856},
};

// prior built with p = 2, shrinkage 0.05, first own-lag mean 0.1
inline constexpr std::array<double, 2> kPriorS2 = {0.6863450278195767,
                                                   1.2589886297375796};
inline constexpr std::array<double, 5> kPriorXi0Diag = {
    2.0000000000000000e-03, 1.3726900556391533e+01, 2.5179772594751590e+01,
    5.4907602225566130e+01, 1.0071909037900636e+02};
inline constexpr double kPriorAlpha0 = 4.0;

// posterior at focal calendar time s = 12 (1-based), kernel sd 3
inline constexpr double kPostKernelSd = 3.0;
inline constexpr int kPostFocal = 12;
inline constexpr std::array<double, 18> kPostRho = {
    0.01566471402025736, 0.04028000180709562, 0.09268331304324637,
    0.1908352839479324,  0.3516097090650345,  0.5797064063202061,
    0.8552644063043096,  1.1291139014073388,  1.333890464738914,
    1.410092618746632,   1.333890464738914,   1.1291139014073388,
    0.8552644063043096,  0.5797064063202061,  0.3516097090650345,
    0.1908352839479324,  0.09268331304324637, 0.04028000180709562};
inline constexpr double kPostRhoSum = 10.572524306035044;
inline constexpr double kPostAlphaTilde = 14.572524306035044;
inline constexpr double kPostPhiTilde[5][2] = {
    {-0.147729667816504, 0.15035880775675964},
    {0.00802186155121192, -0.03220953077863961},
    {0.07957187789421116, 0.04303222588570624},
    {0.02846594455584145, -0.06663848475962532},
    {0.03511563163494636, 0.01156577942668452},
};
inline constexpr std::array<double, 5> kPostXiTildeDiag = {
    10.574524306035043, 21.947273345210377, 40.44513673127992, 62.94633573301333,
    117.80670904554782};
inline constexpr std::array<double, 5> kPostXiTildeRow0 = {
    10.574524306035043, -1.0795256905877046, 3.1040434475685097, -1.2260724449136644,
    4.402193092091508};
inline constexpr double kPostGammaTilde[2][2] = {
    {8.372135108962174, -6.415303578878047},
    {-6.415303578878047, 13.85743924512427},
};

// --- Spectral fixture: VAR(1), H = 8, bands low (0, pi/5], high (pi/5, pi] ---
inline constexpr double kSpecPhi1[2][2] = {{0.5, 0.1}, {0.2, 0.3}};
inline constexpr double kSpecSigma[2][2] = {{1.0, 0.3}, {0.3, 1.0}};
inline constexpr int kSpecH = 8;
inline constexpr double kSpecThetaLow[2][2] = {
    {0.373956239512805, 0.06683006501799},
    {0.097466217984784, 0.254768529962764},
};
inline constexpr double kSpecThetaHigh[2][2] = {
    {0.505866393998688, 0.053347301470518},
    {0.068692541649739, 0.579072710402713},
};
inline constexpr double kSpecThetaFull[2][2] = {
    {0.879822633511493, 0.120177366488507},
    {0.166158759634523, 0.833841240365477},
};
inline constexpr double kSpecTotalFull = 14.31680630615151;
// 100/N * off-diagonal row sums / column sums of theta-full
inline constexpr std::array<double, 2> kSpecFromFull = {6.0088683244253590,
                                                        8.3079379817261432};
inline constexpr std::array<double, 2> kSpecToFull = {8.3079379817261432,
                                                      6.0088683244253590};

}  // namespace oracle
