#pragma once

namespace latval {

/// phi(t) = (e^t - 1)/t continued through t = 0 as the entire function
/// sum_{n>=0} t^n/(n+1)!. Positive and increasing on R, phi(0) = 1.
double phi_stable(double t);

/// sinh(z)/z with the removable singularity filled in.
double sinhc(double z);

/// Second divided difference exp[a, b, c]. Symmetric in the nodes (they are
/// sorted on entry, so permutations give bit-identical results) and stable
/// under node collisions: exp[t,t,t] = e^t / 2.
double exp_divdiff2(double a, double b, double c);

}  // namespace latval
