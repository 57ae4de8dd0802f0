#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "generators.hpp"
#include "morse/error.hpp"
#include "morse/vector_fields.hpp"
#include "oracles.hpp"

using namespace morse;
using morse::testing::Rng;

namespace {

Simplex S(std::initializer_list<Vertex> v) { return Simplex(v); }

MorseSequence triangle_v() {
  return MorseSequence{testing::full_simplex(3),
                       {Fill{S({1})}, Expand{S({2}), S({1, 2})}, Expand{S({3}), S({2, 3})},
                        Expand{S({1, 3}), S({1, 2, 3})}}};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Parse;
}

std::set<Simplex> critical_faces(const MorseSequence& seq) {
  std::set<Simplex> out;
  for (const MorseItem& item : seq.items) {
    if (const auto* f = std::get_if<Fill>(&item)) out.insert(f->face);
  }
  return out;
}

/// Item i gets a value strictly above item i-1, with random gaps; both faces
/// of a pair share their item's value.
MorseFunction sampled_function(const IndexedSequence& seq, Rng& rng) {
  std::vector<std::int64_t> values(seq.complex().size(), 0);
  std::int64_t v = static_cast<std::int64_t>(rng() % 5) - 2;
  for (const auto& st : seq.steps()) {
    v += 1 + static_cast<std::int64_t>(rng() % 4);
    values[st.lower] = v;
    if (!st.critical()) values[st.upper] = v;
  }
  return MorseFunction(seq.complex(), values);
}

}  // namespace

TEST_CASE("acyclicity") {
  const Complex hollow = Complex::closure(std::vector<std::vector<Vertex>>{{1, 2}, {2, 3}, {1, 3}});
  const auto rotation =
      VectorField::from_pairs({{S({1}), S({1, 2})}, {S({2}), S({2, 3})}, {S({3}), S({1, 3})}});
  CHECK_FALSE(is_acyclic(rotation, hollow));
  CHECK(kind_of([&] { vf_to_morse_sequence(rotation, hollow); }) == ErrorKind::CyclicField);

  CHECK(is_acyclic(VectorField{}, hollow));
  CHECK(is_acyclic(gradient_vector_field(triangle_v()), testing::full_simplex(3)));
  const auto outside = VectorField::from_pairs({{S({7}), S({7, 8})}});
  CHECK(kind_of([&] { is_acyclic(outside, hollow); }) == ErrorKind::NotAFace);
}

TEST_CASE("malformed fields are rejected") {
  CHECK(kind_of([] { VectorField::from_pairs({{S({1}), S({1, 2, 3})}}); }) == ErrorKind::InvalidField);
  CHECK(kind_of([] { VectorField::from_pairs({{S({1}), S({1, 2})}, {S({1}), S({1, 3})}}); }) ==
        ErrorKind::InvalidField);
  CHECK(kind_of([] { VectorField::from_pairs({{S({3}), S({1, 2})}}); }) == ErrorKind::InvalidField);
}

TEST_CASE("field to sequence on small complexes") {
  const Complex tri = testing::full_simplex(3);
  const MorseSequence from_v = vf_to_morse_sequence(gradient_vector_field(triangle_v()), tri);
  CHECK(validate(from_v).ok);
  CHECK(gradient_vector_field(from_v) == gradient_vector_field(triangle_v()));
  CHECK(critical_faces(from_v) == std::set<Simplex>{S({1})});

  const MorseSequence all_fills = vf_to_morse_sequence(VectorField{}, tri);
  CHECK(validate(all_fills).ok);
  CHECK(critical_faces(all_fills).size() == tri.size());

  const MorseSequence nothing = vf_to_morse_sequence(VectorField{}, Complex());
  CHECK(nothing.items.empty());
  CHECK(validate(nothing).ok);
}

TEST_CASE("random sequences: field round trip") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex k = testing::random_complex(rng);
    const MorseSequence seq = testing::random_sequence(k, rng);
    const VectorField v = gradient_vector_field(seq);
    CHECK(is_acyclic(v, k));
    const MorseSequence back = vf_to_morse_sequence(v, k);
    REQUIRE(validate(back).ok);
    CHECK(gradient_vector_field(back) == v);
    CHECK(equivalent(back, seq));
  }
}

TEST_CASE("canonical function of a small sequence") {
  const IndexedSequence v(triangle_v());
  const MorseFunction f = canonical_morse_function(v);
  CHECK(f(S({1})) == 1);
  CHECK(f(S({2})) == 2);
  CHECK(f(S({1, 2})) == 2);
  CHECK(f(S({3})) == 3);
  CHECK(f(S({2, 3})) == 3);
  CHECK(f(S({1, 3})) == 4);
  CHECK(f(S({1, 2, 3})) == 4);
  CHECK(is_morse_function_on_sequence(f, v));
  CHECK(is_basic_morse_function(f).ok);
  CHECK(is_flat(f));
  CHECK(is_excellent(f));
  CHECK(basic_function_to_sequence(f).items == v.sequence().items);

  const IndexedSequence point(MorseSequence{Complex::closure(std::vector<std::vector<Vertex>>{{1}}), {Fill{S({1})}}});
  CHECK(canonical_morse_function(point).values() == std::vector<std::int64_t>{1});
}

TEST_CASE("canonical function of a filtration is a bijection onto 1..n") {
  const IndexedSequence filt(testing::filtration(testing::fixture("four_triangles")));
  auto values = canonical_morse_function(filt).values();
  std::sort(values.begin(), values.end());
  std::vector<std::int64_t> expected(values.size());
  std::iota(expected.begin(), expected.end(), 1);
  CHECK(values == expected);
  CHECK(gradient_field_of_function(canonical_morse_function(filt)).empty());
}

TEST_CASE("the zero function against a few sequences") {
  const Complex edge = Complex::closure(std::vector<std::vector<Vertex>>{{1, 2}});
  const MorseFunction zero(edge, std::vector<std::int64_t>(edge.size(), 0));
  CHECK(is_morse_function_on_sequence(zero, IndexedSequence(MorseSequence{edge, {Fill{S({1})}, Expand{S({2}), S({1, 2})}}})));
  CHECK_FALSE(is_morse_function_on_sequence(
      zero, IndexedSequence(MorseSequence{edge, {Fill{S({1})}, Fill{S({2})}, Fill{S({1, 2})}}})));

  const Complex point = Complex::closure(std::vector<std::vector<Vertex>>{{1}});
  CHECK(is_morse_function_on_sequence(MorseFunction(point, {0}), IndexedSequence(MorseSequence{point, {Fill{S({1})}}})));

  const Complex tri = testing::full_simplex(3);
  const MorseFunction flat(tri, std::vector<std::int64_t>(tri.size(), 0));
  CHECK(kind_of([&] { gradient_field_of_function(flat); }) == ErrorKind::NotAMorseFunction);
}

TEST_CASE("basic functions: each violated property is named") {
  const Complex edge = Complex::closure(std::vector<std::vector<Vertex>>{{1, 2}});
  // ids are (1), (2), (1,2)
  CHECK(is_basic_morse_function(MorseFunction(edge, {1, 1, 1})).violated == "semi-injective");
  CHECK(is_basic_morse_function(MorseFunction(edge, {1, 1, 2})).violated == "generic");
  CHECK(is_basic_morse_function(MorseFunction(edge, {1, 3, 2})).violated == "monotone");
  CHECK(is_basic_morse_function(MorseFunction(edge, {1, 2, 2})).ok);
  CHECK(kind_of([&] { basic_function_to_sequence(MorseFunction(edge, {1, 1, 1})); }) == ErrorKind::NotBasic);

  const MorseSequence seq = basic_function_to_sequence(MorseFunction(edge, {1, 2, 2}));
  CHECK(seq.items == std::vector<MorseItem>{Fill{S({1})}, Expand{S({2}), S({1, 2})}});
}

TEST_CASE("gradient field of a function") {
  const Complex tri = testing::full_simplex(3);
  std::vector<std::int64_t> strict(tri.size());
  std::iota(strict.begin(), strict.end(), 10);
  CHECK(gradient_field_of_function(MorseFunction(tri, strict)).empty());

  strict[tri.id_of(S({1, 3}))] = strict[tri.id_of(S({1, 2, 3}))];
  const VectorField one = gradient_field_of_function(MorseFunction(tri, strict));
  CHECK(one == VectorField::from_pairs({{S({1, 3}), S({1, 2, 3})}}));
}

TEST_CASE("random sequences: sampled functions recover the field") {
  Rng rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    const Complex k = testing::random_complex(rng);
    const IndexedSequence seq(testing::random_sequence(k, rng));
    const VectorField expected = gradient_vector_field(seq.sequence());
    for (int sample = 0; sample < 3; ++sample) {
      const MorseFunction f = sampled_function(seq, rng);
      CHECK(is_morse_function_on_sequence(f, seq));
      CHECK(gradient_field_of_function(f) == expected);
      CHECK(is_flat(f));
      CHECK(strongly_equivalent(f, canonical_morse_function(seq)));
    }

    const MorseFunction canon = canonical_morse_function(seq);
    CHECK(is_basic_morse_function(canon).ok);
    CHECK(is_excellent(canon));
    CHECK(basic_function_to_sequence(canon).items == seq.sequence().items);
  }
}
