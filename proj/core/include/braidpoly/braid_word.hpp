#ifndef BRAIDPOLY_BRAID_WORD_HPP
#define BRAIDPOLY_BRAID_WORD_HPP

#include <string>
#include <string_view>
#include <vector>

namespace braidpoly {

// A braid on `strands` strands as an ordered sequence of signed generator
// indices: letter k with |k| in [1, strands-1] denotes sigma_{|k|}^{sign k}.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// True iff every letter is a valid index for the strand count.
bool is_valid(const BraidWord& w);

// True iff every letter is positive (the empty word is positive).
bool is_positive(const BraidWord& w);

// Parses `<n> ":" (<signed-int> | "s"<i>("^"<e>)?)*`, whitespace separated.
// Powers unroll at parse time; throws ParseError on bad syntax, n < 1, or
// an index outside [1, n-1].
BraidWord parse_braid(std::string_view text);

// Canonical emitter, `<n>: i1 i2 ...`; round-trips through parse_braid.
std::string to_text(const BraidWord& w);

// Permutation of the closure: entry i is the endpoint of the strand
// entering at position i (0-based).
std::vector<int> closure_permutation(const BraidWord& w);

// Number of components of the closure = cycle count of the permutation.
int closure_components(const BraidWord& w);

// Sum of the signs of the letters.
int exponent_sum(const BraidWord& w);

// Word rotated left by k positions (closure unchanged).
BraidWord rotated(const BraidWord& w, std::size_t k);

// Deletes adjacent inverse pairs, including across the cyclic seam,
// until none remain. Closure unchanged.
BraidWord cyclic_free_reduce(const BraidWord& w);

// Index (0-based) of the lexicographically least rotation of the letters.
std::size_t least_rotation_index(const std::vector<int>& letters);

// Strand count plus the lexicographically least cyclic rotation of the
// letters. Equal keys imply equal closures; rotation-invariant.
std::string canonical_key(const BraidWord& w);

// Per-generator occurrence counts by absolute index; entry [i] counts
// sigma_i^{+-1} letters, entry [0] unused.
std::vector<int> index_counts(const BraidWord& w);

}  // namespace braidpoly

#endif
