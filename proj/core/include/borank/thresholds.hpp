#pragma once

#include <string>

#include "borank/contributions.hpp"
#include "borank/quad_field.hpp"

namespace borank {

/// One term of the closed-form bound: a_j rho^2 / (8 j^2) + (a_j + b_j) rho / j.
Rational closed_form_term(const ContributionTable& table, int j, long rho, long n);
/// The right-hand side of the bound lemma: max over j.
Rational closed_form_bound(const ContributionTable& table, long rho, long n);

/// First r >= n^2 the closed form cannot refute (refuted when every term at
/// rho = r - n^2 is strictly below r).
long closed_form_bound_at(int n, const ContributionTable& table);

/// Smallest integer n satisfying the asymptotic threshold inequality of the
/// 2nn (epsilon in (0,1/4)) and 3nn (epsilon in (0,1/2)) statements.
long threshold_2nn(const Rational& eps);
long threshold_3nn(const Rational& eps);

/// Border substitution: each unit reduction of the first factor dimension
/// adds one to a lower bound.
long lickteig_shift(long base_bound, int steps);

/// Kernel of the hook family at inner size sigma*tau: C(sigma*tau+1, 2) +
/// sigma*tau.
long hook_kernel(long sigma, long tau);

/// Largest rho = 2*sigma still refutable as far as the hook family is
/// concerned (the 2*sqrt(2)*n ceiling for the pairwise tests).
long barrier_check(long n);

}  // namespace borank
