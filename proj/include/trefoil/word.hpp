#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "trefoil/fraction.hpp"
#include "trefoil/integer.hpp"
#include "trefoil/letter.hpp"

namespace trefoil {

enum class Generator : char { a = 'a', b = 'b' };

/// An element of the trefoil quandle <a, b | a*b*a = b, b*a*b = a> written as
/// a base generator followed by operator letters, applied left to right.
struct QWord {
  Generator base = Generator::a;
  std::vector<Letter> tail;

  friend bool operator==(const QWord&, const QWord&) = default;
};

/// Grammar: [ab][abAB]*. Throws ParseError.
QWord parse_word(std::string_view text);
std::string render_word(const QWord& w);

/// Cancels adjacent inverse operator pairs in the tail.
QWord free_reduce(const QWord& w);

/// Canonical shape of a trefoil-quandle element.
///
/// General forms are stored as continued-fraction terms k1, ..., kn and spelled
///   n odd:  a * b^kn * a^-k(n-1) * b^k(n-2) * ... * a^-k2 * b^k1
///   n even: b * a^-kn * b^k(n-1) * ...         * a^-k2 * b^k1
/// with k2..kn >= 1, kn > 1 when n >= 2, and k1 any integer. The four shortest
/// elements are Special: a (0/1), b (1/0), ab (1/1), ba (-1/1); the General
/// spellings [0], [1], [-1] of three of them are not canonical.
class NormalForm {
 public:
  enum class Special { a, b, ab, ba };

  static NormalForm special(Special s) { return NormalForm(s); }
  /// Stores the terms as given; see is_valid().
  static NormalForm general(std::vector<Int> terms) { return NormalForm(std::move(terms)); }
  /// The canonical form for valid terms, preferring Special. Throws DomainError
  /// if the terms violate the continued-fraction constraints.
  static NormalForm canonical(std::vector<Int> terms);

  bool is_special() const { return std::holds_alternative<Special>(data_); }
  Special special_kind() const { return std::get<Special>(data_); }
  /// Empty for Special forms.
  const std::vector<Int>& terms() const;
  Generator base() const;

  /// Class constraints: Special, or General with nonempty terms satisfying the
  /// constraints above and not equal to a Special element.
  bool is_valid() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  explicit NormalForm(Special s) : data_(s) {}
  explicit NormalForm(std::vector<Int> terms) : data_(std::move(terms)) {}
  std::variant<Special, std::vector<Int>> data_;
};

QWord to_word(const NormalForm& nf);
std::string to_string(const NormalForm& nf);

/// Rewriting rules used by normalize(). Each names the relation it applies.
enum class Rule {
  Append,          // letter appended; the result is already normal
  FreeReduction,   // x X = 1
  Idempotence,     // a*a = a, a*A = a (same for b)
  RelationAba,     // a b a = b
  RelationBa,      // b a = a B        (from b*a*b = a)
  RelationBA,      // b A = a b        (from a*b*a = b)
  FixupBase,       // a b A = b A A or b A = a b, when the first block has exponent 1
  Case1,           // B^s a = a b A^s B
  Case2,           // A b^s = b a^s B A
  Case3,           // a B^s = B A^s b a, then b A^t = A B^t a b
};

std::string to_string(Rule rule);

struct RewriteStep {
  Rule rule;
  std::string word;  // the whole word after the step
};

/// Normal form by rewriting: starting from the base generator, append one tail
/// letter at a time and restore normal form. If trace is non-null every rule
/// application is recorded with the resulting word.
NormalForm normalize(const QWord& w, std::vector<RewriteStep>* trace = nullptr);

/// phi(a) = 0/1, phi(b) = 1/0, then fold the tail over pf_op / pf_op_inv.
PFrac word_to_frac(const QWord& w);

/// 1/0 -> b; otherwise the continued-fraction word, with Special preferred.
NormalForm frac_to_word(const PFrac& x);

/// normalize(w1) == normalize(w2). Debug builds also assert agreement with the
/// fraction images.
bool words_equal(const QWord& w1, const QWord& w2);

/// x a b a == x b a b.
bool braid_relation_holds(const QWord& x);

/// {"input": ..., "normal_form": ..., "fraction": "p/q"}
nlohmann::json word_report_json(const std::string& input, const NormalForm& nf, const PFrac& value);

}  // namespace trefoil
