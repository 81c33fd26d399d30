#include "tgkz/rank_duality.hpp"

#include <map>

#include "tgkz/error.hpp"
#include "tgkz/parallel.hpp"

namespace tgkz {

namespace {

constexpr const char* kModule = "rank_duality";

void require_hypotheses(const PointConfig& config) {
  auto report = check_hypotheses(config);
  if (report.all()) return;
  std::string why;
  if (!report.spans) why += " columns do not span N_Q;";
  if (!report.pointed) why += " cone is not pointed;";
  if (report.spans && !report.delta_divides_ell) why += " [N : ZA] does not divide ell;";
  throw Error(ErrorCode::HypothesisFailure, kModule, "hypotheses fail:" + why);
}

std::vector<std::vector<long>> torsion_tuples(const std::vector<long>& orders) {
  std::vector<std::vector<long>> out{{}};
  for (long o : orders) {
    std::vector<std::vector<long>> next;
    for (const auto& t : out)
      for (long k = 0; k < o; ++k) {
        auto u = t;
        u.push_back(k);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Integer rank_formula(const PointConfig& config, ModuleKind kind) {
  if (kind == ModuleKind::Explicit)
    throw Error(ErrorCode::Unsupported, kModule, "the rank formula covers K and K_interior only");
  require_hypotheses(config);
  return Integer(config.ell()) * normalized_volume(config);
}

std::vector<Cyclotomic> dual_parameter(const std::vector<Cyclotomic>& beta, const PointConfig& config) {
  if (beta.size() != config.d()) throw Error(ErrorCode::DimensionMismatch, kModule, "beta must have d entries");
  auto eps = epsilon_A(config);
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < beta.size(); ++i) out.push_back(-beta[i] - Cyclotomic(Rational(eps[i])));
  return out;
}

WeylElement sign_twist(const WeylElement& p) { return p.sign_twisted(); }

SystemPresentation sign_twist(const SystemPresentation& sys) {
  SystemPresentation out = sys;
  for (auto& r : out.relations)
    for (auto& t : r.terms) t.op = t.op.sign_twisted();
  return out;
}

DualSystem dual_system(const PointConfig& config, const std::vector<Cyclotomic>& beta, std::optional<std::size_t> bound) {
  require_hypotheses(config);
  auto dual = dual_parameter(beta, config);
  auto sys = bbgkz_primitive_presentation(SemigroupModule::interior(config), dual, bound);
  DualityReport report{beta,
                       epsilon_A(config),
                       dual,
                       rank_formula(config, ModuleKind::K),
                       rank_formula(config, ModuleKind::KInterior),
                       true};
  return DualSystem{sign_twist(sys), std::move(report)};
}

CharacterSplit character_split(const PointConfig& config, std::size_t truncation, unsigned threads) {
  require_hypotheses(config);
  const auto& orders = config.group().torsion_orders();
  CharacterSplit out;
  out.truncation = truncation;
  out.characters = torsion_tuples(orders);
  out.torsion = out.characters;

  auto full = SemigroupModule::full(config);
  std::map<IntVector, std::vector<std::vector<long>>> fibers;
  for (const auto& t : module_slice(full, Integer(truncation))) fibers[t.free].push_back(t.torsion);

  std::vector<IntVector> degrees;
  for (const auto& [deg, fiber] : fibers) degrees.push_back(deg);
  const std::size_t size = out.characters.size();
  out.pieces = parallel_map(degrees.size(), threads, [&](std::size_t p) {
    const auto& fiber = fibers.at(degrees[p]);
    FieldMatrix<Cyclotomic> m(size, std::vector<Cyclotomic>(fiber.size()));
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < fiber.size(); ++c) {
        Cyclotomic v(1);
        for (std::size_t i = 0; i < orders.size(); ++i)
          v *= Cyclotomic::root_of_unity(static_cast<std::uint32_t>(orders[i]), out.characters[r][i] * fiber[c][i]);
        m[r][c] = v;
      }
    Cyclotomic det = fiber.size() == size ? determinant(m) : Cyclotomic(0);
    return SplitPiece{degrees[p], std::move(m), std::move(det)};
  });
  out.certified = !out.pieces.empty();
  for (const auto& piece : out.pieces)
    if (piece.determinant.is_zero()) out.certified = false;
  return out;
}

}  // namespace tgkz
