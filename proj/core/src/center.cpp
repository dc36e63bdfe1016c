#include "artin/center.hpp"

#include "artin/error.hpp"

namespace artin {

void require_infinite_family(const FamilySpec& spec) {
  if (spec.is_sporadic()) {
    throw UnsupportedGroup("operation supports the A, B, D and I2 families only, got " +
                           render(spec));
  }
}

namespace {

// Δ generates the center for B_n, D_even and I2(even).
bool center_is_delta_squared(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::A: return true;
    case Family::B: return false;
    case Family::D:
    case Family::I2: return spec.param % 2 == 1;
    default: return false;
  }
}

}  // namespace

CenterData center_data(const FamilySpec& spec) {
  require_infinite_family(spec);
  CoxeterGroup group(spec);
  Bipartition parts = bipartition(group.matrix());

  CenterData data;
  data.spec = spec;
  data.rank = spec.rank();
  data.h = group.coxeter_number();
  data.J1word = parts.J1;
  data.J2word = parts.J2;
  data.Jword = concat(parts.J1, parts.J2);
  if (data.h % 2 == 0) {
    data.delta = power(data.Jword, data.h / 2);
  } else {
    data.delta = concat(power(data.Jword, (data.h - 1) / 2), data.J1word);
  }
  data.cG_is_delta_squared = center_is_delta_squared(spec);
  data.cG = data.cG_is_delta_squared ? power(data.delta, 2) : data.delta;
  return data;
}

Word fundamental_element(const FamilySpec& spec) { return center_data(spec).delta; }

std::pair<Word, bool> center_generator(const FamilySpec& spec) {
  CenterData data = center_data(spec);
  return {data.cG, data.cG_is_delta_squared};
}

bool check_central(const ArtinMonoid& monoid, std::span<const int> word) {
  for (int i = 1; i <= monoid.rank(); ++i) {
    Word gen{i};
    if (!monoid.equal_positive(concat(gen, word), concat(word, gen))) return false;
  }
  return true;
}

bool has_rank_one_caveat(const FamilySpec& spec) {
  return spec.family == Family::A && spec.param == 1;
}

DeltaIdentityReport verify_delta_identities(const FamilySpec& spec) {
  CenterData data = center_data(spec);
  ArtinMonoid monoid(spec);

  DeltaIdentityReport report;
  report.spec = spec;
  report.delta_squared_is_j_power =
      monoid.equal_positive(power(data.delta, 2), power(data.Jword, data.h));
  report.center_generator_central = check_central(monoid, data.cG);
  if (!data.cG_is_delta_squared) {
    report.delta_is_j_half_power =
        data.h % 2 == 0 && monoid.equal_positive(data.delta, power(data.Jword, data.h / 2));
  }
  return report;
}

}  // namespace artin
