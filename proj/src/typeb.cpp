#include "coxkl/typeb.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "coxkl/error.hpp"

namespace coxkl {

namespace {

constexpr int kMaxTensorDim = 1 << 20;

int index_in(const std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) throw StructuralError("generator missing from subset");
  return static_cast<int>(it - v.begin());
}

}  // namespace

IndexSet::IndexSet(int r, int m) : r_(r), m_(m) {
  if (r < 0 || m < 0) throw InvalidInput("r and m must be non-negative");
  if (r == 0 && m == 0) throw InvalidInput("r and m must not both be zero");
  if (2 * static_cast<long long>(r) + m > 1000) throw ResourceLimit("index set too large");
}

std::vector<int> IndexSet::values() const {
  std::vector<int> v;
  for (int i = 0; i < size(); ++i) v.push_back(value_at(i));
  return v;
}

bool IndexSet::contains(int twice) const noexcept {
  const int top = size() - 1;
  return twice >= -top && twice <= top && (twice + top) % 2 == 0;
}

ValueClass IndexSet::classify(int twice) const {
  if (!contains(twice)) throw InvalidInput("value " + format_half(twice) + " is not in the index set");
  if (std::abs(twice) <= m_ - 1) return ValueClass::bullet;
  return twice > 0 ? ValueClass::plus : ValueClass::minus;
}

int IndexSet::position(int twice) const {
  if (!contains(twice)) throw InvalidInput("value " + format_half(twice) + " is not in the index set");
  return (twice + size() - 1) / 2;
}

std::string format_half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

WeightWord::WeightWord(IndexSet set, std::vector<int> doubled)
    : set_(set), entries_(std::move(doubled)) {
  for (int v : entries_)
    if (!set_.contains(v))
      throw InvalidInput("weight entry " + format_half(v) + " is not in I_{" +
                         std::to_string(set_.r()) + "|" + std::to_string(set_.m()) + "|" +
                         std::to_string(set_.r()) + "}");
}

WeightWord WeightWord::from_values(IndexSet set, const std::vector<double>& values) {
  std::vector<int> doubled;
  for (double x : values) {
    const double t = 2 * x;
    if (!std::isfinite(t) || t != std::floor(t) || std::abs(t) > 1e6)
      throw InvalidInput("weight entries must be half-integers");
    doubled.push_back(static_cast<int>(t));
  }
  return WeightWord(set, std::move(doubled));
}

bool WeightWord::is_antidominant() const {
  if (entries_.empty()) return true;
  if (entries_[0] > set_.m() - 1) return false;
  return std::is_sorted(entries_.rbegin(), entries_.rend());
}

std::vector<WeightWord::Block> WeightWord::blocks() const {
  std::vector<Block> out;
  for (int i = 0; i < d(); ++i) {
    if (!out.empty() && out.back().value == entries_[i]) {
      ++out.back().size;
    } else {
      out.push_back(Block{entries_[i], i, 1, set_.classify(entries_[i])});
    }
  }
  return out;
}

std::string WeightWord::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < d(); ++i) os << (i ? ", " : "") << format_half(entries_[i]);
  os << ')';
  return os.str();
}

WeightWord weight_act(const WeightWord& f, int j) {
  if (j < 0 || j >= f.d()) throw InvalidInput("generator index out of range for weight action");
  std::vector<int> e = f.entries();
  if (j > 0) {
    std::swap(e[j - 1], e[j]);
  } else if (f.index_set().classify(e[0]) != ValueClass::bullet) {
    e[0] = -e[0];
  }
  return WeightWord(f.index_set(), std::move(e));
}

WeightWord weight_act_word(WeightWord f, const Word& w) {
  for (int s : w) f = weight_act(f, s);
  return f;
}

std::vector<WeightWord> antidominant_words(const IndexSet& set, int d) {
  if (d < 1) throw InvalidInput("d must be positive");
  std::vector<WeightWord> out;
  std::vector<int> allowed;
  for (int v : set.values())
    if (v <= set.m() - 1) allowed.push_back(v);
  std::sort(allowed.rbegin(), allowed.rend());
  std::vector<int> cur;
  // Non-increasing sequences over `allowed`, starting points in decreasing order.
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.emplace_back(set, cur);
      return;
    }
    for (std::size_t k = from; k < allowed.size(); ++k) {
      cur.push_back(allowed[k]);
      self(self, k);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

SystemPtr type_b_system(int d) {
  if (d < 1) throw InvalidInput("d must be positive");
  return CoxeterSystem::from_type("B" + std::to_string(d));
}

ParamSet type_b_params(int d) {
  ParamSet p;
  p.alphabet = make_alphabet({"p", "q"});
  for (int i = 0; i < d; ++i) p.q.push_back(LaurentPoly::variable(p.alphabet, i == 0 ? "p" : "q"));
  return p;
}

TensorSpace::TensorSpace(IndexSet set, int d, ParamSet params)
    : set_(set), d_(d), params_(std::move(params)) {
  if (d < 1) throw InvalidInput("d must be positive");
  if (static_cast<int>(params_.q.size()) != d) throw InvalidInput("one parameter per generator");
  long long n = 1;
  for (int i = 0; i < d; ++i) {
    n *= set_.size();
    if (n > kMaxTensorDim) throw ResourceLimit("tensor space dimension too large");
  }
  dim_ = static_cast<int>(n);
}

int TensorSpace::index_of(const WeightWord& f) const {
  if (f.d() != d_ || !(f.index_set() == set_)) throw InvalidInput("weight word does not match the tensor space");
  int idx = 0;
  for (int v : f.entries()) idx = idx * set_.size() + set_.position(v);
  return idx;
}

WeightWord TensorSpace::word_at(int index) const {
  std::vector<int> e(d_);
  for (int i = d_ - 1; i >= 0; --i) {
    e[i] = set_.value_at(index % set_.size());
    index /= set_.size();
  }
  return WeightWord(set_, std::move(e));
}

SparseVec TensorSpace::act(const SparseVec& x, int i) const {
  if (i < 0 || i >= d_) throw InvalidInput("generator index out of range");
  const LaurentPoly diff = params_.diff(i);
  SparseVec out;
  for (const auto& [idx, c] : x) {
    const WeightWord f = word_at(idx);
    const int fs = index_of(weight_act(f, i));
    bool up, down;
    if (i > 0) {
      up = f[i - 1] < f[i];
      down = f[i - 1] > f[i];
    } else {
      const ValueClass cls = set_.classify(f[0]);
      up = cls == ValueClass::plus;
      down = cls == ValueClass::minus;
    }
    if (up) {
      add_term(out, fs, c);
      add_term(out, idx, c * diff);
    } else if (down) {
      add_term(out, fs, c);
    } else {
      add_term(out, idx, c * params_.of(i));
    }
  }
  return out;
}

RightModule TensorSpace::module() const {
  std::vector<std::vector<SparseVec>> action(d_);
  for (int i = 0; i < d_; ++i)
    for (int b = 0; b < dim_; ++b) action[i].push_back(act(unit_vector(b, params_.one()), i));
  auto sys = type_b_system(d_);
  std::vector<int> order(sys->generator_order().begin(), sys->generator_order().end());
  return RightModule(params_, sys->coxeter_matrix(), std::move(order), std::move(action));
}

OrbitModule::OrbitModule(const WeightWord& f, ParamSet params)
    : f_(f), system_(type_b_system(f.d())) {
  if (!f.is_antidominant()) throw InvalidInput("weight word " + f.to_string() + " is not antidominant");
  algebra_ = std::make_unique<HeckeAlgebra>(system_, params);
  const ElementTable& t = system_->element_table();

  for (const auto& blk : f_.blocks()) {
    if (blk.cls == ValueClass::bullet) {
      // Sign change at position blk.start: s_b ... s_1 s_0 s_1 ... s_b.
      Word w;
      for (int j = blk.start; j >= 1; --j) w.push_back(j);
      w.push_back(0);
      for (int j = 1; j <= blk.start; ++j) w.push_back(j);
      seeds_.push_back(std::move(w));
    }
    for (int j = blk.start + 1; j < blk.start + blk.size; ++j) seeds_.push_back({j});
  }
  stabilizer_ = ReflectionSubgroup::from_reflections(system_, seeds_);
  cosets_ = std::make_unique<CosetSystem>(stabilizer_);

  stabilizer_matches_ = true;
  for (Index w = 0; w < t.size(); ++w)
    if ((weight_act_word(f_, t.word(w)) == f_) != stabilizer_->contains(w))
      stabilizer_matches_ = false;

  std::map<std::vector<int>, int> position;
  for (Index rep : cosets_->reps()) {
    words_.push_back(weight_act_word(f_, t.word(rep)));
    if (!position.emplace(words_.back().entries(), dim() - 1).second)
      throw StructuralError("two coset representatives give the same weight word");
  }

  module_ = std::make_unique<RightModule>(three_case_module(*cosets_, params));

  const TensorSpace space(f_.index_set(), f_.d(), params);
  std::vector<std::vector<SparseVec>> action(f_.d());
  for (int i = 0; i < f_.d(); ++i) {
    for (const auto& g : words_) {
      SparseVec image;
      for (const auto& [idx, c] : space.act(unit_vector(space.index_of(g), params.one()), i)) {
        auto it = position.find(space.word_at(idx).entries());
        if (it == position.end()) throw StructuralError("tensor action leaves the orbit of f");
        add_term(image, it->second, c);
      }
      action[i].push_back(std::move(image));
    }
  }
  tensor_module_ = std::make_unique<RightModule>(module_->params(), module_->coxeter_matrix(),
                                                 module_->generator_order(), std::move(action));

  for (Index rep : cosets_->reps())
    psi_.images.push_back(module_->act_hecke(unit_vector(0, params.one()), *algebra_,
                                             algebra_->bar_basis(rep)));
}

std::vector<std::string> OrbitModule::basis_names() const {
  std::vector<std::string> out;
  for (const auto& w : words_) out.push_back("M" + w.to_string());
  return out;
}

ThreeStepInduction three_step_induction(const OrbitModule& orbit) {
  const WeightWord& f = orbit.f();
  const HeckeAlgebra& alg = orbit.algebra();
  const ElementTable& t = alg.table();
  ThreeStepInduction out;

  int d_bullet = 0;
  for (const auto& blk : f.blocks()) {
    if (blk.cls == ValueClass::bullet) d_bullet = blk.start + blk.size;
    for (int j = blk.start + 1; j < blk.start + blk.size; ++j) out.sf.push_back(j);
    if (blk.cls != ValueClass::bullet)
      for (int j = blk.start + 1; j < blk.start + blk.size; ++j) out.sf_bullet.push_back(j);
  }
  for (int j = 1; j < d_bullet; ++j) out.sf_bullet.push_back(j);
  std::sort(out.sf_bullet.begin(), out.sf_bullet.end());
  out.wf_bullet = out.sf_bullet;
  if (d_bullet >= 1) out.wf_bullet.insert(out.wf_bullet.begin(), 0);

  // Step 1: the trivial H(S_f)-module induced to H(S_f^bullet).
  const ParabolicEmbedding emb_sb(alg, out.sf_bullet);
  std::vector<int> local;
  for (int j : out.sf) local.push_back(index_in(out.sf_bullet, j));
  const ParabolicEmbedding emb_s(emb_sb.sub(), local);
  const HeckeAlgebra& hs = emb_s.sub();
  std::vector<std::vector<SparseVec>> triv(hs.system().rank());
  for (int k = 0; k < hs.system().rank(); ++k) triv[k].push_back(SparseVec{{0, hs.params().of(k)}});
  const RightModule trivial(hs.params(), hs.system().coxeter_matrix(),
                            {hs.system().generator_order().begin(), hs.system().generator_order().end()},
                            std::move(triv), 1);
  const InducedModule step1 = induce(trivial, emb_s);
  for (Index x : step1.reps) out.d_reps.push_back(emb_sb.embed_element(x));

  // Step 2: H_0 acts by p Id.
  const ParabolicEmbedding emb_wb(alg, out.wf_bullet);
  const HeckeAlgebra& hw = emb_wb.sub();
  std::vector<std::vector<SparseVec>> ext;
  for (int g : out.wf_bullet) {
    if (g == 0) {
      std::vector<SparseVec> col;
      for (int b = 0; b < step1.module.dim(); ++b) col.push_back(SparseVec{{b, alg.params().of(0)}});
      ext.push_back(std::move(col));
    } else {
      ext.push_back(step1.module.action().at(index_in(out.sf_bullet, g)));
    }
  }
  const RightModule step2(hw.params(), hw.system().coxeter_matrix(),
                          {hw.system().generator_order().begin(), hw.system().generator_order().end()},
                          std::move(ext), step1.module.dim());
  out.extension_ok = check_relations(step2).ok();

  // Step 3: induce to H_{B_d}.
  InducedModule step3 = induce(step2, emb_wb);
  out.w_reps = step3.reps;
  out.module = std::make_unique<RightModule>(std::move(step3.module));

  std::set<int> seen;
  for (Index s1 : out.d_reps)
    for (Index s2 : out.w_reps) {
      const int pos = orbit.cosets().position(t.multiply(s1, s2));
      out.basis_map.push_back(pos);
      if (pos >= 0) seen.insert(pos);
    }
  out.bijective = static_cast<int>(seen.size()) == orbit.dim() &&
                  static_cast<int>(out.basis_map.size()) == orbit.dim();
  if (!out.bijective) return out;

  out.intertwines = true;
  for (int s = 0; s < out.module->rank(); ++s)
    for (int j = 0; j < out.module->dim(); ++j) {
      SparseVec mapped;
      for (const auto& [i, c] : out.module->image(j, s)) add_term(mapped, out.basis_map[i], c);
      if (mapped != orbit.module().image(out.basis_map[j], s)) out.intertwines = false;
    }
  return out;
}

}  // namespace coxkl
