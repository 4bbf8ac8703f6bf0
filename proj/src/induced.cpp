#include "coxkl/induced.hpp"

#include <set>

#include "coxkl/error.hpp"

namespace coxkl {

void validate_type_b_chain(const CoxeterSystem& w, const std::vector<int>& chain) {
  const int d = static_cast<int>(chain.size());
  if (d == 0) throw InvalidInput("type-B chain is empty");
  for (int i = 0; i < d; ++i) {
    if (chain[i] < 0 || chain[i] >= w.rank()) throw InvalidInput("chain generator out of range");
    for (int j = i + 1; j < d; ++j) {
      if (chain[i] == chain[j]) throw InvalidInput("chain lists a generator twice");
      const int expect = j != i + 1 ? 2 : (i == 0 ? 4 : 3);
      if (w.coxeter_order(chain[i], chain[j]) != expect)
        throw InvalidInput("chain does not label a type-B parabolic subgroup: m(" +
                           std::to_string(chain[i] + 1) + "," + std::to_string(chain[j] + 1) +
                           ") = " + std::to_string(w.coxeter_order(chain[i], chain[j])) +
                           ", expected " + std::to_string(expect));
    }
  }
}

Word chain_word(const std::vector<int>& chain, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int s : w) out.push_back(chain.at(s));
  return out;
}

QuasiParabolicModule::QuasiParabolicModule(SystemPtr ambient, std::vector<int> chain,
                                           const WeightWord& f, ParamSet params)
    : ambient_(std::move(ambient)), chain_(std::move(chain)) {
  validate_type_b_chain(*ambient_, chain_);
  if (f.d() != static_cast<int>(chain_.size()))
    throw InvalidInput("weight word length differs from the chain length");
  algebra_ = std::make_unique<HeckeAlgebra>(ambient_, params);
  orbit_ = std::make_unique<OrbitModule>(f, params.restrict_to(chain_));
  const ElementTable& t = ambient_->element_table();
  const ElementTable& td = orbit_->system()->element_table();

  std::vector<Word> seeds;
  for (const auto& w : orbit_->stabilizer_seeds()) seeds.push_back(chain_word(chain_, w));
  subgroup_ = ReflectionSubgroup::from_reflections(ambient_, seeds);
  cosets_ = std::make_unique<CosetSystem>(subgroup_);

  for (Index rep : orbit_->cosets().reps())
    orbit_reps_.push_back(t.index_of_word(chain_word(chain_, td.word(rep))));
  chain_reps_ = parabolic_reps(t, chain_);

  factors_.assign(cosets_->size(), {-1, -1});
  factorization_ok_ = orbit_reps_.size() * chain_reps_.size() == cosets_->size();
  for (int i = 0; i < static_cast<int>(orbit_reps_.size()); ++i)
    for (int j = 0; j < static_cast<int>(chain_reps_.size()); ++j) {
      const Index w = t.multiply(orbit_reps_[i], chain_reps_[j]);
      const int pos = cosets_->position(w);
      if (pos < 0 || factors_[pos].first >= 0 ||
          t.length(w) != t.length(orbit_reps_[i]) + t.length(chain_reps_[j])) {
        factorization_ok_ = false;
        continue;
      }
      factors_[pos] = {i, j};
    }

  module_ = std::make_unique<RightModule>(three_case_module(*cosets_, params));
  bar_ = cyclic_bar(*module_, *cosets_);

  const ParabolicEmbedding emb(*algebra_, chain_);
  const InducedModule ind = induce(orbit_->module(), emb);
  std::vector<int> to_rep;
  for (const auto& [b, x] : ind.basis)
    to_rep.push_back(cosets_->position(t.multiply(orbit_reps_.at(b), ind.reps[x])));
  auto transport = [&](const SparseVec& v, bool& ok) {
    SparseVec out;
    for (const auto& [i, c] : v) {
      if (to_rep[i] < 0) {
        ok = false;
        continue;
      }
      add_term(out, to_rep[i], c);
    }
    return out;
  };
  tensor_agrees_ = std::set<int>(to_rep.begin(), to_rep.end()).size() == cosets_->size() &&
                   ind.module.dim() == dim();
  if (!tensor_agrees_) return;
  for (int s = 0; s < ambient_->rank(); ++s)
    for (int j = 0; j < ind.module.dim(); ++j)
      if (transport(ind.module.image(j, s), tensor_agrees_) != module_->image(to_rep[j], s))
        tensor_agrees_ = false;

  const BarMap tbar = induced_bar(ind, orbit_->module(), orbit_->psi(), emb);
  bar_agrees_ = true;
  for (int j = 0; j < ind.module.dim(); ++j)
    if (transport(tbar.images[j], bar_agrees_) != bar_.images[to_rep[j]]) bar_agrees_ = false;
}

}  // namespace coxkl
