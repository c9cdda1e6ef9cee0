#include "cfauto/continued_fraction.hpp"

#include "cfauto/error.hpp"

namespace cfauto {

namespace {

constexpr std::size_t kMaxConvergentIndex = std::size_t{1} << 22;

}  // namespace

std::vector<SpecialConvergent<MultiPoly>> special_convergents(const BackboneSpec& spec, unsigned n_max) {
  if (n_max < 1 || n_max > 64) {
    throw Error(ErrorCode::LevelTooLarge, "symbolic level " + std::to_string(n_max) + " not in [1, 64]");
  }
  const AlphabetPtr& alphabet = spec.alphabet();
  std::vector<MultiPoly> letters;
  for (std::size_t i = 0; i < alphabet->size(); ++i) letters.push_back(MultiPoly::variable(alphabet, i));
  return special_convergents_in(spec, letters, n_max, MultiPoly::one(alphabet));
}

std::vector<SpecialConvergent<UniPoly>> special_convergents(const BackboneSpec& spec,
                                                            const std::vector<UniPoly>& images,
                                                            unsigned n_max) {
  if (n_max < 1 || n_max > 30) {
    throw Error(ErrorCode::LevelTooLarge, "specialized level " + std::to_string(n_max) + " not in [1, 30]");
  }
  require_nonconstant_images(images, *spec.alphabet());
  return special_convergents_in(spec, images, n_max, UniPoly::one(images.front().field()));
}

std::vector<UniPoly> partial_quotients(const BackboneSpec& spec, const std::vector<UniPoly>& images,
                                       std::size_t count) {
  std::vector<UniPoly> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(images.at(s_at(spec, n)));
  return out;
}

LaurentSeries beta_partial_sum(const BackboneSpec& spec, const std::vector<UniPoly>& images,
                               unsigned levels, std::int64_t precision) {
  const auto specials = special_convergents(spec, images, levels);
  const FieldPtr& field = images.front().field();
  LaurentSeries sum(field, precision);
  for (const auto& sc : specials) {
    sum = series_add(sum, series_expand(RationalFunction(UniPoly::one(field), sc.u), precision));
  }
  return sum;
}

CfSeries cf_to_series(const BackboneSpec& spec, const std::vector<UniPoly>& images, std::int64_t precision) {
  require_nonconstant_images(images, *spec.alphabet());
  if (precision < 1) throw Error(ErrorCode::PrecisionTooLow, "series precision must be >= 1");
  const FieldPtr& field = images.front().field();

  // Stream convergents until the error valuation deg y_m + deg y_{m+1}
  // reaches the target.
  UniPoly x_prev2(field), y_prev2 = UniPoly::one(field);
  UniPoly x_prev = UniPoly::one(field), y_prev(field);
  std::size_t m = 0;
  for (;;) {
    if (m >= kMaxConvergentIndex) {
      throw Error(ErrorCode::PrecisionTooLow, "precision " + std::to_string(precision) +
                                                  " needs more than 2^22 partial quotients");
    }
    const UniPoly& s = images[s_at(spec, m)];
    UniPoly x = s * x_prev + x_prev2;
    UniPoly y = s * y_prev + y_prev2;
    x_prev2 = std::move(x_prev);
    y_prev2 = std::move(y_prev);
    x_prev = std::move(x);
    y_prev = std::move(y);
    ++m;
    // y_{m+1} = s_m y_m + y_{m-1} has degree deg s_m + deg y_m.
    const std::int64_t next_deg = images[s_at(spec, m)].degree() + y_prev.degree();
    if (y_prev.degree() + next_deg >= precision) break;
  }
  LaurentSeries alpha = series_expand(RationalFunction(x_prev, y_prev), precision);
  LaurentSeries beta = series_invert(alpha).truncated(precision);

  // deg u_{n+1} = 2 deg u_n + deg eps_n; sum until the tail 1/u_{M+1} lies
  // beyond the precision.
  unsigned levels = 1;
  std::int64_t deg_u = images[epsilon_at(spec, 0)].degree();
  while (true) {
    const std::int64_t next = 2 * deg_u + images[epsilon_at(spec, levels)].degree();
    if (next >= precision) break;
    deg_u = next;
    ++levels;
    if (levels >= 30) throw Error(ErrorCode::PrecisionTooLow, "partial-sum route exceeds 30 levels");
  }
  LaurentSeries partial = beta_partial_sum(spec, images, levels, precision);
  const bool agree = partial == beta;
  return CfSeries{std::move(alpha), std::move(beta), std::move(partial), m, levels, agree};
}

}  // namespace cfauto
