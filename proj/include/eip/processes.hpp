#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eip/hypergraph.hpp"
#include "eip/interval_system.hpp"
#include "eip/limit.hpp"
#include "eip/rng.hpp"

namespace eip {

/// (eta_1, ..., eta_{N-1}) with eta_n in [n+1].
class EraserSequence {
public:
    EraserSequence() = default;
    explicit EraserSequence(std::vector<int> values);

    const std::vector<int>& values() const { return values_; }
    bool operator==(const EraserSequence& o) const = default;

private:
    std::vector<int> values_;
};

/// (U_1, ..., U_N), pairwise distinct reals in [0,1].
class USequence {
public:
    explicit USequence(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const { return values_; }

    /// N iid uniforms, redrawing on exact duplicates.
    static USequence draw(int n, SeededRng& rng);

private:
    std::vector<double> values_;
};

/// (S_1, ..., S_N) with S_n obtained from S_{n+1} by erasing 'n+1' from its
/// one-line notation.
class PermutationSequence {
public:
    explicit PermutationSequence(std::vector<Permutation> perms);

    int size() const { return static_cast<int>(perms_.size()); }
    const std::vector<Permutation>& perms() const { return perms_; }
    const Permutation& at(int n) const { return perms_[n - 1]; }

private:
    std::vector<Permutation> perms_;
};

/// (I_1, ..., I_N) with I_n = delete_point(I_{n+1}, eta_n).
struct EipTrajectory {
    std::vector<IntervalSystem> systems; // systems[n-1] lives on [n]
    EraserSequence erasers;

    int size() const { return static_cast<int>(systems.size()); }
    const IntervalSystem& at(int n) const { return systems[n - 1]; }

    /// Checks the deletion invariant at every step.
    bool consistent() const;
};

/// eta_k = #{i in [k+1] : U_i <= U_{k+1}} (relative rank of the new value).
EraserSequence eta_from_u(const USequence& u);

/// S_n arranges the first n U-values in increasing order.
PermutationSequence perm_from_u(const USequence& u);

/// S_n = b_n(eta_1,...,eta_{n-1}): insert 'n' into the eta_{n-1}-th gap.
PermutationSequence perm_from_eta(const EraserSequence& eta, int n_max);

/// eta_n = position of 'n+1' in the one-line notation of S_{n+1}.
EraserSequence eta_from_perm(const PermutationSequence& s);

/// Forward simulation: draws U, sets I_n = sample_system(K, sorted first n
/// values) and eta = eta_from_u. The returned trajectory satisfies the
/// deletion invariant exactly (verified before returning).
std::pair<EipTrajectory, USequence> simulate_eip(const LimitSet& k, int n, SeededRng& rng);

/// Backward chain: independent uniform erasers, deleting down from I_N.
EipTrajectory backward_chain(const IntervalSystem& top, SeededRng& rng);

/// One step of the uniform binary tree growth chain: picks one of the 2n-1
/// nodes, replaces it by a cherry and reattaches the old subtree on a
/// uniformly chosen side. Input must be binary.
IntervalSystem remy_step(const IntervalSystem& tree, SeededRng& rng);

/// Chain from the one-leaf tree up to n leaves.
IntervalSystem remy_chain(int n, SeededRng& rng);

/// H = relabel(I viewed as a hypergraph, S_n).
IntervalHypergraph exchangeable_hypergraph(const IntervalSystem& sys, const Permutation& s_n);

/// Exactly uniform 231-avoiding permutation via the Catalan-weighted
/// recursive decomposition sigma = sigma_L . n . sigma_R.
Permutation sample_231_avoiding(int n, SeededRng& rng);

/// Normalized graph {(i/n, sigma(i)/n)}; a plain point set (no implicit
/// diagonal).
std::vector<Point> permutation_graph(const Permutation& sigma);

/// True iff sigma contains no 231 pattern (brute force, test oracle).
bool avoids_231(const Permutation& sigma);

} // namespace eip
