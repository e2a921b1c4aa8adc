"""Reference values computed once with mpmath at 40 digits and frozen here.

GAMMA_05_1      gammainc(0.5, 1)
CF_05_1_XI2     gammainc(0.5, 2) / gammainc(0.5, 1)
LAPLACE_05_1    gammainc(0.5, 0.5) / gammainc(0.5, 1)
EY_05_1         exp(-1) / gammainc(0.5, 1)
MEIJER_1_2_05   quad(y (y-1)^-0.5 e^-y, [1, inf]) / gamma(0.5)
LTILDE_05_1_1   gammainc(0.5, 1) / gamma(0.5)
CF1D_05_08_1_1  gammainc(0.5, 0.5) / gamma(0.5)
E_HALF_HALF_1   sum_j 1 / gamma(j/2 + 1/2), 200 terms
M4_05_1         3 quad(y e^-y (y-1)^-0.5, [1, inf]) / (gamma(0.5) gammainc(0.5, 1))
"""

GAMMA_05_1 = 0.27880558528066198
CF_05_1_XI2 = 0.28925933416697372
LAPLACE_05_1 = 2.0172416238657633
EY_05_1 = 1.3194837571173956
MEIJER_1_2_05 = 0.55181916175716348
LTILDE_05_1_1 = 0.15729920705028513
CF1D_05_08_1_1 = 0.3173105078629141
E_HALF_HALF_1 = 5.5731696643100398
M4_05_1 = 5.9376769070282803
