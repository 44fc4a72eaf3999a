// Generated by make_reference_values.py; do not edit by hand.
#pragma once

namespace refvals {

struct EnScaledCase {
    int n;
    double x;
    double value;
};
inline const EnScaledCase kEnScaled[] = {
    {1, 0x1.999999999999ap-4, 0x1.01dfce9153961p+1 /* 2.0146425447084515 */},
    {1, 0x1.0000000000000p+0, 0x1.3154710477cc6p-1 /* 0.59634736232319407 */},
    {1, 0x1.4000000000000p+2, 0x1.5d064d4d3fa27p-3 /* 0.17042217628473219 */},
    {2, 0x1.0000000000000p-1, 0x1.13bc20f85a093p-1 /* 0.5385446837581348 */},
    {3, 0x1.599999999999ap+1, 0x1.85db6ddcdead2p-3 /* 0.19035993414202906 */},
    {5, 0x1.8000000000000p+3, 0x1.e9b5b771408fdp-5 /* 0.059779032026215241 */},
    {10, 0x1.a666666666666p+1, 0x1.45a885dba4e9dp-4 /* 0.079506419070009618 */},
    {40, 0x1.e000000000000p+2, 0x1.5f1bc76c90d05p-6 /* 0.021429962873537729 */},
    {2, 0x1.0624dd2f1a9fcp-10, 0x1.fcc1483c48982p-1 /* 0.99366212592967451 */},
};

struct EiCase {
    double x;
    double value;
};
inline const EiCase kEi[] = {
    {-0x1.0000000000000p-1, -0x1.1e9aa50574b82p-1 /* -0.55977359477616084 */},
    {-0x1.8000000000000p+1, -0x1.ab91c1085c700p-7 /* -0.013048381094197037 */},
    {-0x1.4000000000000p+4, -0x1.b0922b8aaf44ep-34 /* -9.8355252906498815e-11 */},
};

struct Phi1ScaledCase {
    double u;
    int v;
    double mu;
    double value;
};
inline const Phi1ScaledCase kPhi1Scaled[] = {
    {0x1.6666666666666p-1, 0, 0x1.4cccccccccccdp+0, 0x1.89d89d89d89d8p-1 /* 0.76923076923076916 */},
    {0x1.0cccccccccccdp+1, 3, 0x1.999999999999ap-1, 0x1.1e06147ae147ap+6 /* 71.505937499999987 */},
    {0x0.0p+0, 2, 0x1.0000000000000p+1, 0x1.0000000000000p-2 /* 0.25 */},
    {0x1.4000000000000p+2, 7, 0x1.6666666666666p-2, 0x1.eb1637bfa52ecp+26 /* 128735454.99445695 */},
    {0x1.ccccccccccccdp-1, -1, 0x1.b333333333333p+0, 0x1.c46863970b014p-2 /* 0.44180446252244221 */},
    {0x1.4000000000000p+1, -3, 0x1.3333333333333p-1, 0x1.4d4d258db0b8ep-5 /* 0.040686200472484932 */},
    {0x1.999999999999ap-5, -5, 0x1.8000000000000p+1, 0x1.29ea7c2037641p+15 /* 38133.242433291402 */},
    {0x1.c000000000000p+2, -2, 0x1.199999999999ap+0, 0x1.eb9d7cc9a0147p-7 /* 0.015002904826588405 */},
};

struct Phi2Case {
    int gamma;
    double mu;
    double beta;
    double value;
};
inline const Phi2Case kPhi2[] = {
    {1, 0x1.ccccccccccccdp-1, 0x1.0000000000000p+1, 0x1.90e32dd08b082p-2 /* 0.39149161897035623 */},
    {4, 0x1.51eb851eb851fp-2, 0x1.3333333333333p+0, 0x1.4ee3fe76704ccp-3 /* 0.16352080153413906 */},
    {7, 0x1.0000000000000p+1, 0x1.47ae147ae147bp-5, 0x1.3192128ac2b8fp+25 /* 40051749.084067456 */},
};

struct Theta1Case {
    int v;
    int gamma;
    double mu;
    double alpha;
    double beta;
    double value;
};
inline const Theta1Case kTheta1[] = {
    {2, 3, 0x1.199999999999ap+0, 0x1.999999999999ap-1, 0x1.b333333333333p+0, 0x1.6c4fbee6f94aap-1 /* 0.71154591149811108 */},
    {0, 1, 0x1.0000000000000p-1, 0x1.0000000000000p+1, 0x1.3333333333333p-2, 0x1.391e790ed6a6fp+2 /* 4.8924849171549871 */},
    {4, 6, 0x1.ae147ae147ae1p-3, 0x1.0000000000000p+2, 0x1.199999999999ap+1, 0x1.78ed4da35fc26p+16 /* 96493.303274140315 */},
    {5, 9, 0x1.8000000000000p+1, 0x0.0p+0, 0x1.4000000000000p+5, 0x1.24b150143b2c8p-37 /* 8.3188248299562524e-12 */},
};

struct Theta2Case {
    int v;
    int gamma;
    double mu;
    double rho;
    double beta;
    double value;
};
inline const Theta2Case kTheta2[] = {
    {2, 3, 0x1.0000000000000p+0, 0x1.4cccccccccccdp+0, 0x1.0000000000000p+1, 0x1.6d5289d89c5f0p-3 /* 0.17838008587163712 */},
    {1, 5, 0x1.999999999999ap-2, 0x1.8000000000000p+2, 0x1.999999999999ap-1, 0x1.034645efbbfd6p-6 /* 0.015824859902693188 */},
    {3, 2, 0x1.ccccccccccccdp-1, 0x1.1800000000000p+5, 0x1.8000000000000p+0, 0x1.6a16e8e0a8bd0p-21 /* 6.7444423386788065e-07 */},
    {0, 4, 0x1.b333333333333p+0, 0x0.0p+0, 0x1.3333333333333p-1, 0x1.6cbf2844f92f2p-5 /* 0.044524744654870121 */},
};

struct Theta3Case {
    int v;
    int gamma;
    int lam;
    double mu;
    double rho;
    double alpha;
    double beta;
    double xi;
    double value;
};
inline const Theta3Case kTheta3[] = {
    {1, 2, 3, 0x1.999999999999ap-1, 0x1.199999999999ap+0, 0x1.0000000000000p-1, 0x1.6666666666666p+0, 0x1.4cccccccccccdp+1, 0x1.095b4f1204a1fp-4 /* 0.064784344547924352 */},
    {2, 4, 2, 0x1.4cccccccccccdp+0, 0x1.199999999999ap+1, 0x1.8000000000000p+1, 0x1.ccccccccccccdp-1, 0x1.e666666666666p-1, 0x1.d769cf5129520p-1 /* 0.92072913995494687 */},
    {0, 3, 1, 0x1.3333333333333p-1, 0x0.0p+0, 0x1.0000000000000p+1, 0x1.8000000000000p+1, 0x1.6666666666666p-1, 0x1.e8696963b4970p-2 /* 0.47696461363843579 */},
    {2, 2, 5, 0x1.0000000000000p-1, 0x1.0000000000000p+2, 0x1.0000000000000p+0, 0x1.0000000000000p+1, 0x1.a000000000000p+2, 0x1.7bc270a900a7bp-5 /* 0.046357364692103574 */},
};

struct Theta4Case {
    double u;
    int v;
    int gamma;
    double mu;
    double rho;
    double beta;
    double value;
};
inline const Theta4Case kTheta4[] = {
    {0x1.999999999999ap-1, 1, 2, 0x1.6666666666666p-1, 0x1.199999999999ap+0, 0x1.0000000000000p+1, 0x1.580f8cccdea81p-6 /* 0.020999801159158785 */},
    {0x1.3333333333333p-2, 0, 1, 0x1.0000000000000p+0, 0x1.0000000000000p-1, 0x1.8000000000000p+1, 0x1.a0c365172da60p-7 /* 0.012718605385413528 */},
    {0x1.0000000000000p+1, 1, 2, 0x1.ccccccccccccdp-1, 0x1.4cccccccccccdp+0, 0x1.0000000000000p+1, 0x1.9bd7af56241bbp-4 /* 0.1005474900323468 */},
    {0x1.2000000000000p+2, 2, 3, 0x1.0000000000000p-2, 0x1.999999999999ap-1, 0x1.4000000000000p+2, 0x1.198da48b3c317p+4 /* 17.597080749404167 */},
};

struct Theta5Case {
    double u;
    int v;
    int gamma;
    double mu;
    double alpha;
    double beta;
    double value;
};
inline const Theta5Case kTheta5[] = {
    {0x1.3333333333333p+0, 2, 3, 0x1.ccccccccccccdp-1, 0x1.6666666666666p-1, 0x1.8000000000000p+0, 0x1.6928a0117efd2p+0 /* 1.4107761423792806 */},
    {0x1.0000000000000p-1, 1, 4, 0x1.199999999999ap+0, 0x1.0000000000000p+1, -0x1.999999999999ap-3, 0x1.83dd466ed5630p+7 /* 193.93217798571413 */},
    {0x1.8000000000000p+1, 0, 2, 0x1.999999999999ap-2, 0x0.0p+0, 0x1.ccccccccccccdp-1, 0x1.12e567a5f8499p-1 /* 0.5369064703082983 */},
};

struct Theta6Case {
    double u;
    int v;
    int gamma;
    double mu;
    double alpha;
    double beta;
    double value;
};
inline const Theta6Case kTheta6[] = {
    {0x1.8000000000000p+0, 2, 3, 0x1.999999999999ap-1, 0x1.3333333333333p-1, 0x1.199999999999ap+0, 0x1.ad7d9f19b8d6cp-3 /* 0.20971226022002598 */},
    {0x1.6666666666666p-1, 1, 2, 0x1.0000000000000p+0, 0x1.8000000000000p+0, -0x1.0000000000000p+1, 0x1.09d818824e603p-2 /* 0.25961340232206015 */},
    {0x1.47ae147ae147bp-6, 3, 2, 0x1.3333333333333p+0, 0x1.999999999999ap-2, 0x1.4000000000000p+2, 0x1.28bfeca1ea5d4p-32 /* 2.6989228397281635e-10 */},
};

struct Theta7Case {
    int v;
    int gamma;
    double mu;
    double rho;
    double alpha;
    double value;
};
inline const Theta7Case kTheta7[] = {
    {2, 3, 0x1.3333333333333p+0, 0x1.6666666666666p-1, 0x1.ccccccccccccdp-1, 0x1.bb0d781900ac7p+1 /* 3.4613485452731285 */},
    {0, 5, 0x1.0000000000000p-1, 0x1.0000000000000p+1, 0x1.8000000000000p+1, 0x1.104e189c57683p-1 /* 0.5318458262297131 */},
    {4, 0, 0x1.0000000000000p+0, 0x0.0p+0, 0x1.c000000000000p+2, 0x1.8000000000000p+4 /* 24 */},
};

struct ExpPolyLowerCase {
    int k;
    double a;
    double x;
    double value;
};
inline const ExpPolyLowerCase kExpPolyLower[] = {
    {0, 0x1.0000000000000p+0, 0x1.0000000000000p-1, 0x1.92e9a0720d3ecp-2 /* 0.39346934028736658 */},
    {3, 0x1.999999999999ap-1, 0x1.0000000000000p+1, 0x1.278cf29f1f962p+0 /* 1.1544944418415857 */},
    {6, 0x1.4000000000000p+1, 0x1.4000000000000p+3, 0x1.2dfcf072f2bacp+0 /* 1.1796407967219507 */},
    {2, 0x1.8000000000000p+0, 0x1.47ae147ae147bp-7, 0x1.61e955fd47eb6p-22 /* 3.2960573988388338e-07 */},
};

struct SrPdfCase {
    int m;
    double b;
    double omega;
    double x;
    double value;
};
inline const SrPdfCase kSrPdf[] = {
    {5, 0x1.010624dd2f1aap-2, 0x1.1db22d0e56042p-2, 0x1.999999999999ap-3, 0x1.e9cb2a6f67c87p-1 /* 0.95662815675667978 */},
    {5, 0x1.010624dd2f1aap-2, 0x1.1db22d0e56042p-2, 0x1.0000000000000p+0, 0x1.814badf25d091p-2 /* 0.37626525680321615 */},
    {5, 0x1.010624dd2f1aap-2, 0x1.1db22d0e56042p-2, 0x1.c000000000000p+1, 0x1.8e20b6171c91bp-7 /* 0.012149895583409667 */},
    {2, 0x1.999999999999ap-4, 0x1.8000000000000p+0, 0x1.999999999999ap-3, 0x1.48fc7599211abp-2 /* 0.32127555606009633 */},
    {2, 0x1.999999999999ap-4, 0x1.8000000000000p+0, 0x1.0000000000000p+0, 0x1.87d62605ff065p-2 /* 0.38265284930799331 */},
    {2, 0x1.999999999999ap-4, 0x1.8000000000000p+0, 0x1.c000000000000p+1, 0x1.51c7f04025135p-4 /* 0.082466066817066544 */},
    {1, 0x1.0000000000000p-1, 0x1.6666666666666p-1, 0x1.999999999999ap-3, 0x1.0bbfb2e4f9d79p-1 /* 0.52294692082516214 */},
    {1, 0x1.0000000000000p-1, 0x1.6666666666666p-1, 0x1.0000000000000p+0, 0x1.4e7d8ca03e7f4p-2 /* 0.3266508076482062 */},
    {1, 0x1.0000000000000p-1, 0x1.6666666666666p-1, 0x1.c000000000000p+1, 0x1.337359c31f9e8p-4 /* 0.075061178811644091 */},
    {3, 0x1.020c49ba5e354p-4, 0x1.0624dd2f1a9fcp-11, 0x1.999999999999ap-3, 0x1.a068a8485ff0cp+0 /* 1.6265969444938859 */},
    {3, 0x1.020c49ba5e354p-4, 0x1.0624dd2f1a9fcp-11, 0x1.0000000000000p+0, 0x1.7e244394454f7p-9 /* 0.0029155094617957472 */},
    {3, 0x1.020c49ba5e354p-4, 0x1.0624dd2f1a9fcp-11, 0x1.c000000000000p+1, 0x1.0b99c31941467p-37 /* 7.6056674407476908e-12 */},
};

struct SrCdfCase {
    int m;
    double b;
    double omega;
    double x;
    double value;
};
inline const SrCdfCase kSrCdf[] = {
    {5, 0x1.010624dd2f1aap-2, 0x1.1db22d0e56042p-2, 0x1.0000000000000p+0, 0x1.6eb38ca4b78a5p-1 /* 0.71621360312180526 */},
    {2, 0x1.999999999999ap-4, 0x1.8000000000000p+0, 0x1.0000000000000p+0, 0x1.719a0c69a9985p-2 /* 0.3609392108432064 */},
    {1, 0x1.0000000000000p-1, 0x1.6666666666666p-1, 0x1.0000000000000p+0, 0x1.c75dc422c8f47p-2 /* 0.44469362699804943 */},
    {3, 0x1.020c49ba5e354p-4, 0x1.0624dd2f1a9fcp-11, 0x1.0000000000000p+0, 0x1.ffcfa92a3deecp-1 /* 0.99963120117805948 */},
};

}  // namespace refvals
