#include "paretail/typo_ledger.hpp"

#include <algorithm>

namespace paretail {

namespace {

const char* kRegen = "acceptance: closed-form regeneration";

std::vector<TypoEntry> build() {
  return {
      {"x1-star-sign", "reversion coefficients of the tail series, first order",
       "x*_1 = c0^{-a-2} c1", "x*_1 = -c0^{-a-2} c1", "inversion: low-order closed forms"},
      {"x3-star-degree", "reversion coefficients of the tail series, third order",
       "x*_3 = c0^{-3a-4} {-c0^2 c3 + (2+3a) c0 c1 c2 - (2+3a)(1+a) c1^2/2}",
       "x*_3 = c0^{-3a-4} {-c0^2 c3 + (2+3a) c0 c1 c2 - (2+3a)(1+a) c1^3/2}",
       "inversion: low-order closed forms"},
      {"reversion-prefactor", "reversion theorem, first of the two equivalent expressions",
       "x*_i = k n^{-1} C^_i(-n, 1/x0, x)", "x*_i = k n^{-1} x0^{-n} C^_i(-n, 1/x0, x)",
       "inversion: round trip"},
      {"reversion-exponential-factorial", "reversion theorem, exponential variant",
       "(u/v)^k = sum_i y*_i v^{ia} / (ia)!", "(u/v)^k = sum_i y*_i v^{ia} / i!",
       "inversion: exponential variant"},
      {"log-bell-ordinary", "log(1 + lambda S), ordinary Bell form",
       "D^_r = -sum_i B^_{ri}(x) (-lambda)^i / i!", "D^_r = -sum_i B^_{ri}(x) (-lambda)^i / i",
       "series: log against brute-force composition"},
      {"log-bell-exponential", "log(1 + lambda S), exponential Bell form",
       "D_r = -sum_i B_{ri}(y) (-lambda)^i / (i-1)!", "D_r = -sum_i B_{ri}(y) (-lambda)^i (i-1)!",
       "series: exponential views"},
      {"C3psi-form", "quantile power series, third coefficient",
       "C_{3psi} = psi c0^{psi-3a-3} [c0^2 c2 + (psi-3a-1) c0 c1 c2 + {(psi+1)_2/6 (psi+3a/2)(a+1)} c1^3]",
       "C_{3psi} = psi c0^{psi-3a-3} [c0^2 c3 + (psi-3a-1) c0 c1 c2 + (psi-3a-1)(psi-3a-2) c1^3/6]", kRegen},
      {"thetabar-definition", "cumulative power vector",
       "thetabar_i = sum_{j=1}^{k} theta_j", "thetabar_i = sum_{j=i}^{k} theta_j",
       "beta moments: thetabar convention against quadrature"},
      {"nfree-trailing-index", "n-free factor of the joint beta moment",
       "B(s:thetabar) = Gamma(s1+1+thetabar_1)/s1! prod_{i>=2} b(s_{i-1}-s_i, s_i+1 : thetabar_1)",
       "B(s:thetabar) = Gamma(s1+1+thetabar_1)/s1! prod_{i>=2} b(s_{i-1}-s_i, s_i+1 : thetabar_i)",
       "beta moments: factorization"},
      {"finiteness-rank", "finiteness condition of the joint moment expansion", "s_i = u - r_i",
       "s_i = n - r_i", kRegen},
      {"double-series-lead", "double series in (1/n, n^{-a}) for the joint moment",
       "prefactor n^{psi_1}", "prefactor n^{psibar_1}", kRegen},
      {"leading-C0-power", "leading coefficient of the joint moment",
       "C_0(s:psi) = c0 B(s : -psibar)", "C_0(s:psi) = c0^{psibar_1} B(s : -psibar)", kRegen},
      {"leading-C1-power", "first tail-dependent coefficient of the joint moment",
       "C_1(s:psi) = c0^{psibar_1-a-2} c1 sum_j psi_j B(s : a I_j - psibar)",
       "C_1(s:psi) = c0^{psibar_1-a-1} c1 sum_j psi_j B(s : a I_j - psibar)", kRegen},
      {"leading-display-C1", "leading terms of the joint moment",
       "... + n^{-a} C_0(s:psi) + O(n^{-2a0})", "... + n^{-a} C_1(s:psi) + O(n^{-2a0})", kRegen},
      {"pair-C0-lambda1", "pair leading coefficient, unit lambda",
       "C_0(s:1) = c0^2 (s1-1)^{-1} s2", "C_0(s:1) = c0^2 (s1-1)^{-1} s2^{-1}", kRegen},
      {"pair-C0-lambda2", "pair leading coefficient, lambda = 2",
       "C_0(s:2) = c0^2 <s2-2>_2^{-1} <s2>_2^{-1}", "C_0(s:2) = c0^4 <s1-2>_2^{-1} <s2>_2^{-1}", kRegen},
      {"covariance-Ec-power", "covariance of two normalized top order statistics",
       "Covar = F0 + F1/n + Ec F2/n + O(n^{-2a0})", "Covar = F0 + F1/n + Ec F2/n^a + O(n^{-2a0})",
       "extreme moments: covariance at a = 2"},
      {"unit-alpha-Ec", "unit tail index specialization", "E_c = c0^{-a-1} c0", "E_c = c0^{-a-1} c1",
       kRegen},
      {"product-moment-sign", "product moment of k normalized top order statistics",
       "{1 + n^{-1} <k>_2/2} B_{k0} + n^{-a} E_c B_k", "{1 - n^{-1} <k>_2/2} B_{k0} + n^{-a} E_c B_{k.}",
       kRegen},
      {"Bk0-index", "product moment leading coefficient", "B_{k0} = prod_{i=1}^k 1/(s_1 - k + 1)",
       "B_{k0} = prod_{i=1}^k 1/(s_i - k + i)", kRegen},
      {"B10-inverse", "product moment leading coefficient, k = 1", "B_{10} = s1", "B_{10} = 1/s1",
       kRegen},
      {"Bkj-factorial-kind", "product moment first tail coefficient",
       "B_{kj} = prod_{i<j} (s_i-k+a+i)^{-1} <s_j-k+j+1>_{a-1} prod_{i>j} (s_i-k+i)^{-1}",
       "B_{kj} = prod_{i<j} (s_i-k+a+i)^{-1} (s_j-k+j+1)_{a-1} prod_{i>j} (s_i-k+i)^{-1} (rising factorial)",
       kRegen},
      {"B-small-k-line", "product moment first tail coefficients, k <= 2",
       "B_{1.} = B_{11} - 1, B_{22} = 1/s2, B_{22} = 1/s2, B_{22} = s1",
       "B_{1.} = B_{11} = (s1+1)_{a-1}; B_{21} = (s1)_{a-1}/s2, B_{22} = (s2+1)_{a-1}/(s1+a-1); at a = 1: B_{21} = 1/s2, B_{22} = 1/s1",
       kRegen},
      {"B4-dot", "product moment first tail coefficient, k = 4, a = 1",
       "B_{4.} = {s. s3 (s2-2) + s3 (s2 - 4 s2 + 4) - s2 s4} / {(s1-2) <s2-2>_2 <s3>_2 s4}",
       "B_{4.} = (s1 s2 s3 - s1 s3 + s2^2 s3 + s2 s3^2 + s2 s3 s4 - 6 s2 s3 - s2 s4 - 2 s3^2 - 2 s3 s4 + 6 s3 + 2 s4) / (s3 s4 (s1-2)(s2-2)(s2-1)(s3-1))",
       kRegen},
      {"kappa0-division", "third joint cumulant, leading coefficient", "kappa_0 = 2(s1+s2-2) D(s1 s2 s3)",
       "kappa_0 = 2(s1+s2-2) / D(s1 s2 s3)", kRegen},
      {"kappa1-coefficient", "third joint cumulant, 1/n coefficient (and the combined a = 1 display)",
       "kappa_1 = 2{s2(1 - 2 s1) + s1 - s1^2} / D(s1 s2 s3)",
       "kappa_1 = 2{s2(1 - 2 s1) + 2 s1 - s1^2} / D(s1 s2 s3); -13/6 at s = (3,2,1)", kRegen},
      {"covariance-unit-alpha-factor", "covariance for unit tail index and a = 1",
       "<s1>_2^{-1} s2^{-1} (s - n^{-1} s1) + O(n^{-2})", "<s1>_2^{-1} s2^{-1} (1 - n^{-1} s1) + O(n^{-2})",
       kRegen},
      {"pair-d2-form", "n^{-2} coefficient of the pair moment, alpha = beta = 1",
       "d_2(s:1) = C_2(s:1) - D_{2,s} H_c + c0^{-2} c1^2",
       "d_2(s:1) = C_2(s:1) = D_{2,s} H_c + c0^{-2} c1^2", kRegen},
      {"covariance-F3", "n^{-2} covariance coefficient for a = 1 and a = 2",
       "F_{3,s} = (s2+1)/<s1>_2 + s2^{-1}", "F_{3,s} = (s2+1)/(s1)_2 + s2^{-1} = (s2+1)/(s1 (s1+1)) + s2^{-1}",
       kRegen},
      {"covariance-a1-remainder", "n^{-2} covariance refinement for a = 1",
       "... - c0^{-2} H_c F_{3,s} n^{-2} + O(n^{-2})", "... - c0^{-2} H_c F_{3,s} n^{-2} + O(n^{-3})", kRegen},
      {"cauchy-mean-third", "Cauchy normalized mean",
       "E Y_{ns} = s^{-1} - n^{-2} pi^2 (s+1) + O(n^{-3})",
       "E Y_{ns} = s^{-1} - n^{-2} pi^2 (s+1)/3 + O(n^{-3})", "acceptance: Cauchy mean order"},
      {"cauchy-C2", "Cauchy quantile power series, second coefficient",
       "C_{2psi} = psi pi^{4-psi} {1/5 + (psi-5)/a}", "C_{2psi} = psi pi^{4-psi} {1/5 + (psi-5)/18}", kRegen},
      {"cauchy-C3", "Cauchy quantile power series, third coefficient",
       "C_{3psi} = -psi pi^{6-psi} {1/105 - 2 psi/15 + (psi+1)_2/162}",
       "C_{3psi} = -psi pi^{6-psi} {1/7 + (psi-7)/15 + (psi-7)(psi-8)/162}", kRegen},
      {"student-c3-constant", "Student t tail coefficients", "c3 = -(gamma)_3 N^{gamma+3} G_N (N+6)^{-1}/6",
       "c3 = -(gamma)_3 N^{gamma+3} g_N (N+6)^{-1}/6", "catalog: Student t coefficients"},
      {"f-density-power", "F distribution tail",
       "density x^{M/2} (1+nu x)^{-gamma} g_MN, d_i = h C(-gamma,i) nu^i, alpha = N/2 - 1, c_i = d_i/(N/2+i-1)",
       "density x^{M/2-1} (1+nu x)^{-gamma} g_MN, d_i = h C(-gamma,i) nu^{-i}, alpha = N/2, c_i = d_i/(N/2+i)",
       "catalog: tail against distribution function"},
      {"stable-coefficient-divisor", "stable law tail coefficients", "c_i = a_{i+1}(alpha,gamma) gamma^{-1} (i+1)^{-1}",
       "c_i = a_{i+1}(alpha,gamma) alpha^{-1} (i+1)^{-1}", "catalog: stable tail against Monte Carlo"},
  };
}

}  // namespace

const std::vector<TypoEntry>& typo_ledger() {
  static const std::vector<TypoEntry> entries = build();
  return entries;
}

const TypoEntry* find_typo(std::string_view id) {
  const auto& all = typo_ledger();
  auto it = std::find_if(all.begin(), all.end(), [&](const TypoEntry& e) { return e.id == id; });
  return it == all.end() ? nullptr : &*it;
}

}  // namespace paretail
