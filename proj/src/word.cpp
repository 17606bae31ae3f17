#include "trefoil/word.hpp"

#include <cassert>

#include "trefoil/continued_fraction.hpp"
#include "trefoil/error.hpp"

namespace trefoil {

QWord parse_word(std::string_view text) {
  if (text.empty()) throw ParseError("empty word");
  QWord w;
  if (text[0] == 'a') w.base = Generator::a;
  else if (text[0] == 'b') w.base = Generator::b;
  else throw ParseError(std::string("word must start with generator a or b, got '") + text[0] + "'");
  for (std::size_t i = 1; i < text.size(); ++i) {
    auto l = letter_from_char(text[i]);
    if (!l) throw ParseError(std::string("illegal character '") + text[i] + "' in word");
    w.tail.push_back(*l);
  }
  return w;
}

std::string render_word(const QWord& w) {
  std::string out(1, static_cast<char>(w.base));
  for (Letter l : w.tail) out.push_back(to_char(l));
  return out;
}

QWord free_reduce(const QWord& w) {
  QWord out{w.base, {}};
  for (Letter l : w.tail) {
    if (!out.tail.empty() && out.tail.back() == inverse(l)) out.tail.pop_back();
    else out.tail.push_back(l);
  }
  return out;
}

namespace {

const std::vector<Int> kNoTerms;

// Appends the letters of a run: x^e for the b-block (e may be negative) or the
// a-block spelled a^-e.
void append_power(std::vector<Letter>& out, Letter positive, const Int& exponent) {
  Letter l = exponent < 0 ? inverse(positive) : positive;
  Int count = abs(exponent);
  for (Int i = 0; i < count; ++i) out.push_back(l);
}

// Letters for blocks in word order [kn, ..., k2, k1]: positions counted from
// the end alternate b^k1, a^-k2, b^k3, ...
void append_blocks(std::vector<Letter>& out, const std::vector<Int>& blocks_word_order) {
  const std::size_t n = blocks_word_order.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t from_end = n - 1 - i;
    if (from_end % 2 == 0) append_power(out, Letter::b, blocks_word_order[i]);
    else append_power(out, Letter::A, blocks_word_order[i]);
  }
}

Generator base_for_length(std::size_t n) { return n % 2 == 1 ? Generator::a : Generator::b; }

}  // namespace

NormalForm NormalForm::canonical(std::vector<Int> terms) {
  if (terms.empty() || !cf_validate(terms)) throw DomainError("normal form: terms violate the continued-fraction constraints");
  if (terms.size() == 1) {
    if (terms[0] == 0) return special(Special::a);
    if (terms[0] == 1) return special(Special::ab);
    if (terms[0] == -1) return special(Special::ba);
  }
  return general(std::move(terms));
}

const std::vector<Int>& NormalForm::terms() const {
  if (is_special()) return kNoTerms;
  return std::get<std::vector<Int>>(data_);
}

Generator NormalForm::base() const {
  if (is_special()) {
    auto s = special_kind();
    return (s == Special::a || s == Special::ab) ? Generator::a : Generator::b;
  }
  return base_for_length(terms().size());
}

bool NormalForm::is_valid() const {
  if (is_special()) return true;
  const auto& t = terms();
  if (t.empty() || !detail::terms_valid<Int>(t)) return false;
  return !(t.size() == 1 && (t[0] == 0 || t[0] == 1 || t[0] == -1));
}

QWord to_word(const NormalForm& nf) {
  if (nf.is_special()) {
    switch (nf.special_kind()) {
      case NormalForm::Special::a: return {Generator::a, {}};
      case NormalForm::Special::b: return {Generator::b, {}};
      case NormalForm::Special::ab: return {Generator::a, {Letter::b}};
      case NormalForm::Special::ba: return {Generator::b, {Letter::a}};
    }
  }
  std::vector<Int> blocks(nf.terms().rbegin(), nf.terms().rend());
  QWord w{nf.base(), {}};
  append_blocks(w.tail, blocks);
  return w;
}

std::string to_string(const NormalForm& nf) { return render_word(to_word(nf)); }

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::Append: return "append";
    case Rule::FreeReduction: return "free-reduction";
    case Rule::Idempotence: return "idempotence";
    case Rule::RelationAba: return "aba=b";
    case Rule::RelationBa: return "ba=aB";
    case Rule::RelationBA: return "bA=ab";
    case Rule::FixupBase: return "fixup-kn=1";
    case Rule::Case1: return "case1";
    case Rule::Case2: return "case2";
    case Rule::Case3: return "case3";
  }
  return "?";
}

namespace {

// Incremental normalizer. The state is a word already in normal form (the
// point b, or blocks [kn, ..., k1] in word order); pending holds letters still
// to be appended, next letter at the back. Whenever a case rewrites the tail
// of the word, the untouched normal prefix becomes the state and the rewritten
// suffix is pushed back onto pending, so every intermediate word is the
// literal result of the relations applied.
class Normalizer {
 public:
  Normalizer(Generator base, std::vector<RewriteStep>* trace) : trace_(trace) {
    if (base == Generator::b) infinite_ = true;
    else blocks_.push_back(0);
  }

  NormalForm run(const std::vector<Letter>& tail) {
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
      if (!pending_.empty() && pending_.back().letter == *it) ++pending_.back().count;
      else pending_.push_back({*it, 1});
    }
    while (!pending_.empty()) {
      Letter l = pending_.back().letter;
      if (--pending_.back().count == 0) pending_.pop_back();
      append(l);
    }
    NormalForm nf = result();
    // The state spells -1/1 as aB; the canonical spelling is ba.
    if (trace_ && !trace_->empty() && nf.is_special() && nf.special_kind() == NormalForm::Special::ba &&
        trace_->back().word != "ba")
      trace_->push_back({Rule::RelationBa, "ba"});
    return nf;
  }

 private:
  struct Run {
    Letter letter;
    Int count;
  };

  std::size_t n() const { return blocks_.size(); }
  Int& k1() { return blocks_.back(); }

  // Queue runs to be appended next, in the given order.
  void push(std::initializer_list<Run> runs) {
    for (auto it = std::rbegin(runs); it != std::rend(runs); ++it)
      if (it->count > 0) pending_.push_back(*it);
  }

  std::string current_word() const {
    QWord w{infinite_ ? Generator::b : base_for_length(n()), {}};
    if (!infinite_) append_blocks(w.tail, blocks_);
    for (auto it = pending_.rbegin(); it != pending_.rend(); ++it)
      for (Int i = 0; i < it->count; ++i) w.tail.push_back(it->letter);
    return render_word(w);
  }

  void record(Rule rule) {
    if (trace_) trace_->push_back({rule, current_word()});
  }

  void record_literal(Rule rule, const std::string& prefix) {
    if (!trace_) return;
    std::string word = prefix;
    for (auto it = pending_.rbegin(); it != pending_.rend(); ++it)
      for (Int i = 0; i < it->count; ++i) word.push_back(to_char(it->letter));
    trace_->push_back({rule, word});
  }

  void become_b() {
    infinite_ = true;
    blocks_.clear();
  }

  void become_a_word(Int k1) {
    infinite_ = false;
    blocks_.assign(1, std::move(k1));
  }

  // Restores kn > 1 after the first block dropped to exponent 1:
  //   a b A^k ... = b A^(k+1) ...   (n odd)
  //   b A b^k ... = a b^(k+1) ...   (n even)
  void fix_top() {
    if (n() >= 2 && blocks_[0] == 1) {
      blocks_[1] += 1;
      blocks_.erase(blocks_.begin());
      record(Rule::FixupBase);
    }
  }

  // Drops k1 and one letter A from the block a^-k2 (n >= 2). When that block
  // empties, b^k3 becomes the last block.
  void drop_k1_and_one_A() {
    blocks_.pop_back();
    blocks_.back() -= 1;
    if (blocks_.back() == 0) blocks_.pop_back();
    else blocks_.push_back(0);
  }

  void append(Letter l) {
    if (infinite_) {
      switch (l) {
        case Letter::b:
        case Letter::B: record(Rule::Idempotence); return;
        case Letter::a: become_a_word(-1); record(Rule::RelationBa); return;
        case Letter::A: become_a_word(1); record(Rule::RelationBA); return;
      }
    }
    switch (l) {
      case Letter::b: {
        bool cancels = k1() < 0;
        k1() += 1;
        record(cancels ? Rule::FreeReduction : Rule::Append);
        return;
      }
      case Letter::B: {
        bool cancels = k1() > 0;
        k1() -= 1;
        record(cancels ? Rule::FreeReduction : Rule::Append);
        return;
      }
      case Letter::A: append_A(); return;
      case Letter::a: append_a(); return;
    }
  }

  void append_A() {
    if (k1() > 0) {
      // ... b^s A: a new block a^-1 with k1 = 0.
      blocks_.push_back(1);
      blocks_.push_back(0);
      record(Rule::Append);
      fix_top();
      return;
    }
    if (k1() == 0) {
      if (n() == 1) {
        record(Rule::Idempotence);
        return;
      }
      blocks_[n() - 2] += 1;
      record(Rule::Append);
      return;
    }
    // Case 3: the word ends in B^s.
    Int s = -k1();
    if (n() == 1) {
      if (s == 1) {
        // a B A = b a A = b
        record_literal(Rule::RelationBa, "baA");
        become_b();
        record(Rule::FreeReduction);
        return;
      }
      // a B^s A = a [a B^s] A = a B A^s b a A = a B A^s b
      become_a_word(-1);
      push({{Letter::A, s}, {Letter::b, 1}});
      record(Rule::Case3);
      return;
    }
    // ... b A^k2 B^s A = ... b A^(k2+1) B A^s b = ... A B^(k2+1) a b B A^s b
    //                  = ... A B^(k2+1) A^(s-1) b
    // The b consumed on the left is the last letter of b^k3, or the base b
    // (using b = b*b) when n == 2.
    Int k2 = blocks_[n() - 2];
    if (n() == 2) {
      become_b();
    } else {
      blocks_.pop_back();
      blocks_.pop_back();
      blocks_.back() -= 1;
    }
    push({{Letter::A, 1}, {Letter::B, k2 + 1}, {Letter::A, s - 1}, {Letter::b, 1}});
    record(Rule::Case3);
  }

  void append_a() {
    if (k1() == 0) {
      if (n() == 1) {
        record(Rule::Idempotence);
        return;
      }
      // ... A^k2 a
      blocks_.pop_back();
      blocks_.back() -= 1;
      if (blocks_.back() == 0) blocks_.pop_back();
      else blocks_.push_back(0);
      record(Rule::FreeReduction);
      fix_top();
      return;
    }
    if (k1() < 0) {
      // Case 1: ... A^k2 B^s a = ... A^k2 a b A^s B = ... A^(k2-1) b A^s B.
      // With no A block: a B^s a = a a b A^s B = a b A^s B.
      Int s = -k1();
      if (n() == 1) {
        become_a_word(1);
        push({{Letter::A, s}, {Letter::B, 1}});
        record(Rule::Case1);
        return;
      }
      drop_k1_and_one_A();
      push({{Letter::b, 1}, {Letter::A, s}, {Letter::B, 1}});
      record(Rule::Case1);
      fix_top();
      return;
    }
    // Case 2: ... A^k2 b^s a = ... A^(k2-1) b a^s B A a = ... A^(k2-1) b a^s B.
    // With no A block: a b a = b, and a b^s a = a A b^s a = a b a^s B.
    Int s = k1();
    if (n() == 1) {
      if (s == 1) {
        become_b();
        record(Rule::RelationAba);
        return;
      }
      become_a_word(1);
      push({{Letter::a, s}, {Letter::B, 1}});
      record(Rule::Case2);
      return;
    }
    drop_k1_and_one_A();
    push({{Letter::b, 1}, {Letter::a, s}, {Letter::B, 1}});
    record(Rule::Case2);
    fix_top();
  }

  NormalForm result() const {
    if (infinite_) return NormalForm::special(NormalForm::Special::b);
    if (n() == 1) {
      if (blocks_[0] == 0) return NormalForm::special(NormalForm::Special::a);
      if (blocks_[0] == 1) return NormalForm::special(NormalForm::Special::ab);
      if (blocks_[0] == -1) return NormalForm::special(NormalForm::Special::ba);
    }
    return NormalForm::general(std::vector<Int>(blocks_.rbegin(), blocks_.rend()));
  }

  std::vector<RewriteStep>* trace_;
  bool infinite_ = false;
  std::vector<Int> blocks_;
  std::vector<Run> pending_;
};

}  // namespace

NormalForm normalize(const QWord& w, std::vector<RewriteStep>* trace) {
  return Normalizer(w.base, trace).run(w.tail);
}

PFrac word_to_frac(const QWord& w) {
  const PFrac a = PFrac::zero(), b = PFrac::infinity();
  PFrac x = w.base == Generator::a ? a : b;
  for (Letter l : w.tail) {
    const PFrac& y = is_a(l) ? a : b;
    x = is_positive(l) ? pf_op(x, y) : pf_op_inv(x, y);
  }
  return x;
}

NormalForm frac_to_word(const PFrac& x) {
  if (x.is_infinite()) return NormalForm::special(NormalForm::Special::b);
  return NormalForm::canonical(cf_expand(x).terms);
}

bool words_equal(const QWord& w1, const QWord& w2) {
  bool equal = normalize(w1) == normalize(w2);
  assert(equal == (word_to_frac(w1) == word_to_frac(w2)));
  return equal;
}

bool braid_relation_holds(const QWord& x) {
  QWord lhs = x, rhs = x;
  lhs.tail.insert(lhs.tail.end(), {Letter::a, Letter::b, Letter::a});
  rhs.tail.insert(rhs.tail.end(), {Letter::b, Letter::a, Letter::b});
  return words_equal(lhs, rhs);
}

nlohmann::json word_report_json(const std::string& input, const NormalForm& nf, const PFrac& value) {
  return {{"input", input}, {"normal_form", to_string(nf)}, {"fraction", to_string(value)}};
}

}  // namespace trefoil
