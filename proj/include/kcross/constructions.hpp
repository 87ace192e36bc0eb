#pragma once

#include <kcross/core.hpp>

#include <cstddef>
#include <vector>

namespace kcross {

// Generators for explicit antichains with no k-crossing pair. Each returns a
// Family (lexicographically ordered) whose size is given by the matching
// *_size function where a closed form exists.

/// {A : 0 <= A[i] <= k-1 for i < w, sum of coordinates = 0}. Size k^(w-1).
Family product_family(Coord k, std::size_t w);

/// Largest m(A) over the base cube, i.e. the minimum length a tau sequence
/// must have for lexicographic_family(k, w, tau).
std::size_t lexicographic_tau_length(Coord k, std::size_t w);

/// Lexicographic construction. Starts from the vectors of [0,k-1]^w whose rank
/// is congruent to w(k-1) mod k and lifts each A by k on coordinate tau[t] for
/// every t < m(A), where m(A)k + rank(A) = w(k-1). Entries of `tau` are
/// 1-based coordinate indices. Every output vector has rank w(k-1).
Family lexicographic_family(Coord k, std::size_t w, const std::vector<std::size_t> &tau);

enum class CyclicRank { TwoKMinusOne, TwoKMinusTwo };

/// All A in Z^3 with the chosen rank, A[i+1] <= k + A[i] and
/// A[i-1] <= k-1 + A[i] for every i, indices taken cyclically.
Family cyclic_family(Coord k, CyclicRank rank);

/// Rank value selected by `rank` for threshold k.
Coord cyclic_rank_value(Coord k, CyclicRank rank);

/// The single vector (0, k+1, k-2) offered as the completion of the rank 2k-1
/// cyclic family when k = 1 (mod 3).
Vector cyclic_fixup_vector(Coord k);

/// Stacks k copies of `base` (contained in [0,c)^w): copy i is shifted by
/// (i-1)c on every old coordinate and gets -i as the new last coordinate.
Family inductive_lift(const Family &base, Coord k, Coord c);

/// Lifts the width-1 singleton w-1 times, translating the new coordinate back
/// into [0,k) before each further lift. Size k^(w-1).
Family inductive_chain(Coord k, std::size_t w);

/// Eight vectors in Z^4 forming an antichain with no 2-crossing pair whose
/// ranks are not all equal.
Family non_ranked_example();

/// Union of four explicit sets in Z^4 that satisfies the weak compression
/// properties while having more than k^2 vectors with A[4] = 0 (mod k),
/// the latter only for k >= 3.
Family weak_compression_family(Coord k);

/// {A : 0 <= A[i] <= k_i - 1 for i >= 2, A[1] = -(A[2]+...+A[w])}.
/// Size k_2 * ... * k_w.
Family generalized_product_family(const CrossingThresholds &ks);

} // namespace kcross
