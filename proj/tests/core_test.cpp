#include <algorithm>

#include "doctest.h"
#include "matex/catalog.hpp"
#include "matex/matroid_ops.hpp"
#include "matex/set_function.hpp"
#include "matex/sparse_paving.hpp"

using namespace matex;

namespace {

const Matroid& vamos() {
  static Matroid m = *cat::named("vamos").matroid;
  return m;
}

// Independent rank oracle for sparse paving matroids, straight from the
// circuit-hyperplane definition.
int sp_rank_oracle(const SparsePavingMatroid& sp, Mask x) {
  if (popcount(x) < sp.k) return popcount(x);
  if (popcount(x) == sp.k)
    return std::count(sp.chs.begin(), sp.chs.end(), x) ? sp.k - 1 : sp.k;
  return sp.k;
}

}  // namespace

TEST_CASE("subset utilities") {
  CHECK(parse_mask("0123") == 0b1111);
  CHECK(parse_mask("2367") == (bit(2) | bit(3) | bit(6) | bit(7)));
  CHECK(format_mask(parse_mask("035")) == "035");
  CHECK(format_mask(0) == "{}");
  CHECK(k_subsets(4, 2).size() == 6);
  CHECK(k_subsets(9, 5).size() == 126);
  CHECK(k_subsets(4, 2).front() == 0b11);
  CHECK(k_subsets(4, 2).back() == 0b1100);
  int count = 0;
  for_each_submask(0b1011, [&](Mask) { ++count; });
  CHECK(count == 8);
}

TEST_CASE("validate_polymatroid") {
  SUBCASE("vamos rank function is a matroid") {
    auto rep = validate_polymatroid(vamos().to_set_function());
    CHECK(rep.ok());
    CHECK(rep.matroid);
  }
  SUBCASE("zero function is a polymatroid") {
    SetFunction z(4);
    auto rep = validate_polymatroid(z);
    CHECK(rep.ok());
    CHECK(rep.matroid);
  }
  SUBCASE("f({}) = 1 is flagged") {
    SetFunction f(2);
    for (Mask x = 0; x < 4; ++x) f.at(x) = 1;
    auto rep = validate_polymatroid(f);
    REQUIRE(!rep.ok());
    CHECK(rep.violations.front().kind == AxiomViolation::Kind::Normalization);
  }
  SUBCASE("half-integral polymatroid is not a matroid") {
    SetFunction f(2);
    f.at(1) = Rat(1, 2);
    f.at(2) = Rat(1, 2);
    f.at(3) = Rat(1, 2);
    auto rep = validate_polymatroid(f);
    CHECK(rep.ok());
    CHECK(!rep.matroid);
  }
}

TEST_CASE("sparse paving rank") {
  const auto& sp = *cat::named("vamos").sp;
  CHECK(sp.rank(parse_mask("0123")) == 3);
  CHECK(sp.rank(0) == 0);
  CHECK(sp.rank(parse_mask("0124")) == 4);
  for (Mask x = 0; x <= full_mask(8); ++x) CHECK(sp.rank(x) == sp_rank_oracle(sp, x));
  CHECK_THROWS(SparsePavingMatroid::make(8, 4, {parse_mask("0123"), parse_mask("0124")}));
}

TEST_CASE("closure and flats") {
  const Matroid& v = vamos();
  CHECK(closure(v, parse_mask("012")) == parse_mask("0123"));
  CHECK(closure(v, parse_mask("01")) == parse_mask("01"));
  CHECK(closure(v, v.full()) == v.full());
  // closure is idempotent and extensive
  for (Mask x = 0; x <= v.full(); ++x) {
    Mask c = closure(v, x);
    CHECK(contains(c, x));
    CHECK(closure(v, c) == c);
  }
  // rank-3 flats: the 5 circuit-hyperplanes plus the 3-sets in none of them
  auto f3 = flats_of_rank(v, 3);
  CHECK(f3.size() == 5 + (56 - 5 * 4));
  for (Mask ch : cat::named("vamos").sp->chs)
    CHECK(std::binary_search(f3.begin(), f3.end(), ch));
  CHECK(flats_of_rank(v, 0) == std::vector<Mask>{0});
  // T9C hyperplanes include all 18 circuit-hyperplanes
  const auto& t9c = cat::named("t9c");
  auto hps = hyperplanes(*t9c.matroid);
  for (Mask ch : t9c.sp->chs) CHECK(std::binary_search(hps.begin(), hps.end(), ch));
}

TEST_CASE("modular pairs") {
  const Matroid& v = vamos();
  CHECK(is_modular_pair(v, parse_mask("0123"), parse_mask("0145")));
  CHECK(!is_modular_pair(v, parse_mask("0123"), parse_mask("4567")));
  CHECK_THROWS(is_modular_pair(v, parse_mask("012"), parse_mask("45")));
  const Matroid& p81 = *cat::named("p8_1").matroid;
  CHECK(!is_modular_pair(p81, parse_mask("16"), parse_mask("47")));
  CHECK(!is_modular_pair(p81, parse_mask("12"), parse_mask("07")));
  CHECK(!is_modular_pair(p81, parse_mask("06"), parse_mask("24")));
}

TEST_CASE("dual") {
  const auto& vsp = *cat::named("vamos").sp;
  Matroid vd = dual(vamos());
  CHECK(vd.rank() == 4);
  // complement of 2345 is a circuit-hyperplane of the dual
  Mask c = full_mask(8) & ~parse_mask("2345");
  CHECK(c == parse_mask("0167"));
  CHECK(vd.rank(c) == 3);
  CHECK(dual(vd) == vamos());
  // sparse paving dual: complements
  auto dsp = vsp.dual();
  CHECK(dsp.k == 4);
  for (Mask ch : vsp.chs) CHECK(dsp.is_ch(full_mask(8) & ~ch));
  CHECK(dsp.materialize() == vd);
  // involution elementwise on p8
  const auto& p8 = *cat::named("p8").matroid;
  CHECK(dual(dual(p8)) == p8);
}

TEST_CASE("minor") {
  const Matroid& v = vamos();
  SUBCASE("identity") { CHECK(minor(v, 0, 0) == v); }
  SUBCASE("deletion is restriction") {
    Matroid d = minor(v, bit(7), 0);
    for (Mask x = 0; x <= full_mask(7); ++x) CHECK(d.rank(x) == v.rank(x));
  }
  SUBCASE("overlap rejected") { CHECK_THROWS(minor(v, bit(1), bit(1))); }
  SUBCASE("commutation") {
    Mask z1 = bit(2), z2 = bit(5) | bit(6);
    CHECK(minor(minor(v.to_set_function(), z1, 0), 0, /*5,6 shift to 4,5*/ bit(4) | bit(5)) ==
          minor(v.to_set_function(), z1, z2));
  }
  SUBCASE("T7C contracted at (1,1) has rank 4 and the five expected circuit-hyperplanes") {
    const auto& pl = cat::affine_plane_f3();
    const Matroid& t7c = *cat::named("t7c").matroid;
    REQUIRE(cat::AffinePlaneF3::point(1, 1) == 8);
    Matroid m = minor(t7c, 0, bit(8));
    CHECK(m.n() == 8);
    CHECK(m.rank() == 4);
    const Mask z = bit(8);
    for (Mask s : {pl.C(0) | pl.D(-1), pl.C(0) | pl.D(0), pl.C(0) | pl.D(1),
                   pl.A(1) | pl.B(1), cat::displaced_cross(1, 1)}) {
      REQUIRE(contains(s, z));
      Mask t = s & ~z;  // element 8 is the last one, labels stay put
      CHECK(m.rank(t) == 3);
      CHECK(closure(m, t) == t);
    }
  }
}

TEST_CASE("induced polymatroid") {
  const Matroid& v = vamos();
  SUBCASE("vamos blocks give the certificate pattern") {
    auto blocks = BlockPartition::make(
        {parse_mask("01"), parse_mask("23"), parse_mask("45"), parse_mask("67")});
    Polymatroid h = induced_polymatroid(v, blocks);
    CHECK(h == vamos_like_polymatroid());
    CHECK(matches_vamos_pattern(h.f()));
  }
  SUBCASE("singleton blocks copy the matroid") {
    std::vector<Mask> bl;
    for (int i = 0; i < 8; ++i) bl.push_back(bit(i));
    Polymatroid h = induced_polymatroid(v, BlockPartition::make(bl));
    CHECK(h.f() == v.to_set_function());
  }
  SUBCASE("single block") {
    Polymatroid h = induced_polymatroid(v, BlockPartition::make({v.full()}));
    CHECK(h.f().at(0) == 0);
    CHECK(h.f().at(1) == 4);
  }
  SUBCASE("overlapping blocks rejected") {
    CHECK_THROWS(BlockPartition::make({parse_mask("01"), parse_mask("12")}));
  }
}

TEST_CASE("ingleton") {
  const Matroid& v = vamos();
  SUBCASE("vamos violates with slack -1") {
    auto w = ingleton_check(v);
    REQUIRE(w.has_value());
    CHECK(w->slack == -1);
    // recompute the slack of the returned quadruple
    CHECK(ingleton_slack(v.to_set_function(), w->a, w->b, w->c, w->d) == w->slack);
    // the quadruple from the certificate pattern
    CHECK(ingleton_slack(v.to_set_function(), parse_mask("23"), parse_mask("45"), parse_mask("01"),
                         parse_mask("67")) == -1);
  }
  SUBCASE("uniform and ag32 comply") {
    CHECK(!ingleton_check(cat::uniform(4, 8).materialize()));
    CHECK(!ingleton_check(*cat::named("ag32").matroid));
  }
  SUBCASE("polymatroid overload agrees on vhat") {
    // vhat itself violates Ingleton (it is the induced pattern of vamos)
    CHECK(ingleton_check(cat::named("vhat").poly).has_value());
  }
}

TEST_CASE("vamos configuration search") {
  SUBCASE("vamos witness") {
    auto w = contains_vamos_configuration(vamos());
    REQUIRE(w.has_value());
    CHECK((*w)[0] == parse_mask("01"));
    CHECK((*w)[1] == parse_mask("23"));
    CHECK((*w)[2] == parse_mask("45"));
    CHECK((*w)[3] == parse_mask("67"));
  }
  SUBCASE("uniform has none") {
    CHECK(!contains_vamos_configuration(cat::uniform(4, 8).materialize()));
  }
  SUBCASE("T7C contraction has one") {
    Matroid m = minor(*cat::named("t7c").matroid, 0, bit(8));
    CHECK(contains_vamos_configuration(m).has_value());
  }
}
