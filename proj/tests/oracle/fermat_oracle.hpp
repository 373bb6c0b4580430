#pragma once

// Brute-force cohomology of O_X(k) chi^c on the Fermat hypersurface
// x_1^d + ... + x_m^d + y_1^d + ... + y_n^d = 0, with mu_d scaling each y by lambda^{-1}.
// H^0 is the cokernel and the top degree the kernel of multiplication by the equation,
// on monomials and on Cech classes 1/z^a respectively, with ranks computed exactly.

#include <map>
#include <vector>

namespace oracle {

struct FermatCohomology {
  // degree -> multiplicity per character residue
  std::map<int, std::vector<unsigned long long>> rows;
};

FermatCohomology fermat_cohomology(int m, int n, int d, int k, int c);

}  // namespace oracle
