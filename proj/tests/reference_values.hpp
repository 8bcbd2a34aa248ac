#pragma once

// Frozen reference values. Faddeeva rows come from the half-line integral
// oracle evaluated in extended precision; Lambert rows were pinned with an
// independent multi-precision implementation of the branch structure;
// pairing rows come from direct adaptive quadrature of the defining
// integrals (plus the continuation jump on the left). They deliberately
// cover the regions where region-switching implementations historically go
// wrong: reflection quadrants, moderate-|z| branch 0, the real ray left of
// the branch point, near-branch-point pairs, and axis-adjacent spectral
// points.

#include <complex>

namespace refvals {

using C = std::complex<double>;

struct FaddeevaRow {
  C z;
  C w;
};

inline constexpr int kFaddeevaCount = 15;
inline const FaddeevaRow kFaddeeva[kFaddeevaCount] = {
    {{0.00000000000000000e+00, 0.00000000000000000e+00}, {1.00000000000000000e+00, 0.00000000000000000e+00}},
    {{0.00000000000000000e+00, 1.00000000000000000e+00}, {4.27583576155806999e-01, 0.00000000000000000e+00}},
    {{1.00000000000000000e+00, 0.00000000000000000e+00}, {3.67879441171442334e-01, 6.07157705841393724e-01}},
    {{2.50000000000000000e+00, -1.19999999999999996e+00}, {-8.68711055757955958e-02, 1.79389992035906443e-01}},
    {{-3.10000000000000009e+00, 4.00000000000000022e-01}, {2.79290970053066891e-02, -1.88950986902088253e-01}},
    {{6.20000000000000018e+00, 7.90000000000000036e+00}, {4.43062101935564820e-02, 3.44305625154705947e-02}},
    {{-8.00000000000000000e+00, 1.00000000000000002e-02}, {9.03060586837630753e-05, -7.10879960591978416e-02}},
    {{1.20000000000000000e+01, -3.00000000000000000e+00}, {-1.11638896446079033e-02, 4.43612379949635122e-02}},
    {{2.99999999999999989e-01, -4.00000000000000000e+00}, {-1.19771817444350012e+07, 1.09712695127070844e+07}},
    {{2.50000000000000000e+01, 2.00000000000000000e+00}, {1.79818397542056297e-03, 2.24414804865778958e-02}},
    {{-1.70000000000000000e+01, -5.00000000000000000e+00}, {-9.02251298436500433e-03, -3.05784779021033570e-02}},
    {{1.00000000000000002e-03, 1.00000000000000002e-03}, {9.98871622335410603e-01, 1.12638067159989892e-03}},
    {{1.00000000000000000e+01, 1.00000000000000000e+01}, {2.82794674542324528e-02, 2.81384332763368987e-02}},
    {{-5.00000000000000000e-01, -5.00000000000000000e-01}, {1.22200841586857045e+00, -1.18933930859286452e+00}},
    {{2.90000000000000000e+01, 5.00000000000000000e-01}, {3.35927588596769439e-04, 1.94605981671370498e-02}},
};

struct LambertRow {
  int branch;
  C z;
  C w;
};

inline constexpr int kLambertCount = 24;
inline const LambertRow kLambert[kLambertCount] = {
    {0, {1.00000000000000000e+00, 0.00000000000000000e+00}, {5.67143290409783840e-01, 0.00000000000000000e+00}},
    {0, {0.00000000000000000e+00, 4.00000000000000022e-01}, {1.17249609932639567e-01, 3.35867868547943260e-01}},
    {0, {1.46999999999999995e-02, 3.25500000000000012e-01}, {9.48701372021797384e-02, 2.80744879340744491e-01}},
    {0, {-5.00000000000000000e-01, 0.00000000000000000e+00}, {-7.94023632344689312e-01, 7.70111750510379056e-01}},
    {0, {-2.39999999999999991e+00, 0.00000000000000000e+00}, {3.04463048560950245e-01, 1.74366454864034459e+00}},
    {0, {-3.49999999999999978e-01, 1.00000000000000002e-03}, {-7.16520694968987515e-01, 7.22254141118834365e-03}},
    {0, {3.00000000000000000e+00, -2.00000000000000011e-01}, {1.05077493400613919e+00, -3.41139998812143783e-02}},
    {-1, {-2.00000000000000011e-01, 0.00000000000000000e+00}, {-2.54264135777352651e+00, 0.00000000000000000e+00}},
    {-1, {-3.67800000000000016e-01, 0.00000000000000000e+00}, {-1.02092723940942509e+00, 0.00000000000000000e+00}},
    {-1, {-1.50000000000000000e+00, 6.99999999999999956e-01}, {-1.55239712261923735e-01, -1.92703837551662582e+00}},
    {1, {-1.50000000000000000e+00, -6.99999999999999956e-01}, {-1.55239712261923735e-01, 1.92703837551662582e+00}},
    {1, {2.00000000000000000e+00, 2.00000000000000000e+00}, {-6.49757562473696648e-01, 5.37754206843137705e+00}},
    {-2, {1.00000000000000000e+00, 0.00000000000000000e+00}, {-2.40158510486800258e+00, -1.07762995161150705e+01}},
    {2, {-3.00000000000000000e+00, 1.00000000000000000e+00}, {-1.47245296154702965e+00, 1.37084142897340016e+01}},
    {3, {1.00000000000000002e-02, 0.00000000000000000e+00}, {-7.52080888344997067e+00, 1.68591566534512225e+01}},
    {-3, {-1.00000000000000002e-02, -2.00000000000000004e-02}, {-6.80375971391441769e+00, -1.89688158357464580e+01}},
    {0, {-6.99999999999999956e-01, 0.00000000000000000e+00}, {-5.64874052922317738e-01, 1.09426091331251385e+00}},
    {0, {-1.00000000000000000e+00, 0.00000000000000000e+00}, {-3.18131505204764187e-01, 1.33723570143068926e+00}},
    {-1, {-2.50000000000000000e-01, 9.99999999999999955e-07}, {-2.15329236410664304e+00, -7.46833129604787955e-06}},
    {5, {4.00000000000000000e+00, -9.00000000000000000e+00}, {-1.06867722068643611e+00, 2.86552812379026953e+01}},
    {-5, {-4.00000000000000000e+00, 9.00000000000000000e+00}, {-1.03905275798941821e+00, -2.78187761355546854e+01}},
    {0, {1.00000000000000005e-04, 0.00000000000000000e+00}, {9.99900014997333851e-05, 0.00000000000000000e+00}},
    {1, {1.00000000000000005e-04, 0.00000000000000000e+00}, {-1.17120113316074281e+01, 3.42618799260321794e+00}},
    {0, {9.90000000000000036e+00, 0.00000000000000000e+00}, {1.73914255173335164e+00, 0.00000000000000000e+00}},
};

// Omega constant W_0(1).
inline constexpr double kOmegaConstant = 0.56714329040978387;

struct PairingRow {
  C lambda;
  double h;
  double omega0;
  C value;
};

inline constexpr int kCauchyPairingCount = 6;
inline const PairingRow kCauchyPairing[kCauchyPairingCount] = {
    {{1.00000000000000000e+00, 0.00000000000000000e+00}, 1.0, 0.0, {7.57872156141311981e-01, 0.00000000000000000e+00}},
    {{2.99999999999999989e-01, 1.19999999999999996e+00}, 1.0, 0.5, {9.22016258616343287e-01, -6.69434230323000867e-01}},
    {{-4.00000000000000022e-01, 9.00000000000000022e-01}, 2.0, 1.0, {5.23399512545862056e+00, 1.24276233837224459e+00}},
    {{-5.00000000000000028e-02, 1.57079632679489656e+00}, 50.0, 1.57079632679489656e+00, {1.96401749535799439e+01, 0.00000000000000000e+00}},
    {{2.00000000000000000e+00, -3.00000000000000000e+00}, 10.0, -1.0, {2.51532329738838878e-01, 2.48409156312339174e-01}},
    {{-1.19999999999999996e+00, -8.00000000000000044e-01}, 0.5, 2.99999999999999989e-01, {2.32485934953643114e-01, 2.98710773771418703e+00}},
};

struct ExpPairingRow {
  C lambda;
  double a;
  double h;
  double omega0;
  C value;
};

inline constexpr int kExpPairingCount = 5;
inline const ExpPairingRow kExpPairing[kExpPairingCount] = {
    {{1.00000000000000000e+00, 5.00000000000000000e-01}, 0.7, 1.0, 0.0, {5.10887536643272355e-01, -1.40154344322672347e-01}},
    {{-2.99999999999999989e-01, 9.00000000000000022e-01}, 1.5, 2.0, 1.0, {-1.30604730868716712e-01, 1.66910880720121968e+00}},
    {{5.00000000000000028e-02, -2.00000000000000000e+00}, 3.0, 5.0, 0.4, {-2.31923381341757190e-01, 1.33072000873397572e-01}},
    {{-5.99999999999999978e-01, -2.00000000000000011e-01}, 0.25, 0.8, -0.7, {1.60016111867415511e+00, -1.71722531711040038e+00}},
    {{5.00000000000000000e+00, 0.00000000000000000e+00}, 1.0, 1.0, 0.0, {1.39367079866515170e-01, 0.00000000000000000e+00}},
};

}  // namespace refvals
