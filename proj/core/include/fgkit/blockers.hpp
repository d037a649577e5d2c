#pragma once

// Primitivity-blocking words and the orbit-blocking products built from them.

#include <utility>
#include <vector>

#include "fgkit/word.hpp"

namespace fgkit {

/// A product of primitivity-blocking words with no cancellation between
/// cyclically adjacent factors.
struct BlockerSpec {
  int rank = 2;
  /// Occurrence bound: the cyclic length l (plain mode) or the slender chunk
  /// count k (slender mode). The sequence has bound + 1 words.
  std::size_t bound = 0;
  bool slender = false;
  std::vector<Word> sequence;
  Word product;
};

/// x1^-1 x2 x1 for r = 2; x1 x2 ... x_{r-1} x_r^2 x_{r-1} ... x2 x1^-1 otherwise.
Word shortest_pb_word(int rank);

/// x1^2 x2^2 ... x_r^2 x1. Starts and ends with x1, so its powers are reduced.
Word pb_word_square_form(int rank);

/// (x1 x2 ... x_r^2 ... x2 x1^-1, x1^-1 x2 ... x_r^2 ... x2 x1). Requires r >= 3.
std::pair<Word, Word> alternating_pb_pair(int rank);

/// `count` primitivity-blocking words, cyclically without cancellation.
/// Rank 2 repeats the square form. Higher ranks alternate the pair starting
/// with the odd word; an odd count closes the cycle with the even word under
/// the relabelling x1 <-> x2, which is blocking as well.
std::vector<Word> noncancelling_pb_sequence(int rank, std::size_t count);

/// Unit used by occurrence counting: the first word of the sequence.
Word pb_unit(int rank);

/// Product of l + 1 blocking words, l = cyclic length of w.
BlockerSpec orbit_blocker(const Word& w, int rank);

/// Product of k + 1 blocking words, k = number of slender chunks of the
/// cyclic reduction of w. Requires r >= 3.
BlockerSpec orbit_blocker_slender(const Word& w, int rank);

/// Least m >= 0 such that u(m) = w^m v w^-m starts with the first letter of w
/// and ends with the last letter of w^-1. Throws if w and v commute.
std::size_t encapsulation_exponent(const Word& w, const Word& v);

/// Conjugate w^m v w^-m, reduced.
Word encapsulate(const Word& w, const Word& v, std::size_t m);

/// Cyclically reduced primitive word w_Y^-1 w_X w_Y y containing w_X w_Y,
/// for generator sets X, Y partitioning 1..r with |Y| >= 2.
Word split_word_witness(const Word& w_x, const Word& w_y, const std::vector<int>& x_gens,
                        const std::vector<int>& y_gens, int rank);

}  // namespace fgkit
