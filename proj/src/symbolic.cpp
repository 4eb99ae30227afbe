#include "reso/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "reso/errors.hpp"
#include "reso/linalg.hpp"

namespace reso {

std::string SymbolicResonance::str() const {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ",";
    std::string form;
    for (std::size_t j = 0; j < params.size(); ++j) {
      long long c = coeffs[i][j];
      if (c == 0) continue;
      if (c > 0 && !form.empty()) form += "+";
      if (c == -1)
        form += "-";
      else if (c != 1)
        form += std::to_string(c);
      form += params[j];
    }
    out += form.empty() ? "0" : form;
  }
  return out;
}

SymbolicResonance to_symbolic(const Cut& s) {
  const int n = s.length();
  RatMat rows;
  for (const auto& e : s.elements()) {
    RatVec r(n);
    for (int i = 0; i < n; ++i) r[i] = e.at(i);
    rows.push_back(std::move(r));
  }
  RatMat basis = nullspace(rows, n);
  SymbolicResonance sym;
  sym.n = n;
  sym.coeffs.assign(n, std::vector<long long>(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (j >= 26) throw ResourceError("more than 26 free parameters");
    sym.params.push_back(static_cast<char>('a' + j));
    std::vector<long long> col = primitive_integer(basis[j]);
    for (int i = 0; i < n; ++i) sym.coeffs[i][j] = col[i];
  }
  return sym;
}

Cut from_symbolic(const SymbolicResonance& sym, int bound) {
  const int n = sym.n;
  if (n > bound)
    throw ResourceError("symbolic expansion limited to " +
                        std::to_string(bound) + " coordinates");
  const std::size_t k = sym.params.size();
  std::vector<std::vector<long long>> cols(k, std::vector<long long>(n));
  for (std::size_t j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) cols[j][i] = sym.coeffs[i][j];
  std::vector<SignVector> elems;
  for (std::uint64_t idx = 0; idx < pow3(n); ++idx) {
    SignVector v = SignVector::from_index(n, idx);
    bool orth = true;
    for (const auto& c : cols)
      if (v.dot(c) != 0) {
        orth = false;
        break;
      }
    if (orth) elems.push_back(v);
  }
  Cut result(n, std::move(elems));
  CutCheck chk = check_cut(result.elements(), n, bound);
  if (!chk.ok) throw ParseError("parameterization does not describe a cut: " + chk.violation);
  return result;
}

SymbolicResonance parse_symbolic(const std::string& text) {
  std::vector<std::string> forms;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      forms.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  forms.push_back(cur);
  if (forms.empty()) throw ParseError("empty symbolic expression");

  struct Term {
    long long coef;
    char letter;  // 0 for a constant term (only 0 allowed)
  };
  std::vector<std::vector<Term>> parsed;
  std::set<char> letters;
  for (const auto& f : forms) {
    if (f.empty()) throw ParseError("empty coordinate form");
    std::vector<Term> terms;
    std::size_t i = 0;
    while (i < f.size()) {
      long long sign = 1;
      if (f[i] == '+' || f[i] == '-') {
        if (f[i] == '-') sign = -1;
        ++i;
      } else if (!terms.empty()) {
        throw ParseError("expected '+' or '-' in form: " + f);
      }
      if (i >= f.size()) throw ParseError("dangling sign in form: " + f);
      long long mag = 1;
      bool have_digits = false;
      while (i < f.size() && std::isdigit(static_cast<unsigned char>(f[i]))) {
        if (!have_digits) mag = 0;
        have_digits = true;
        mag = mag * 10 + (f[i] - '0');
        if (mag > (1LL << 40)) throw ParseError("coefficient too large");
        ++i;
      }
      char letter = 0;
      if (i < f.size() && f[i] >= 'a' && f[i] <= 'z') {
        letter = f[i];
        ++i;
      }
      if (letter == 0) {
        if (!have_digits || mag != 0)
          throw ParseError("constant term must be 0 in form: " + f);
      } else {
        letters.insert(letter);
      }
      terms.push_back({sign * mag, letter});
    }
    parsed.push_back(std::move(terms));
  }
  if (letters.empty()) throw ParseError("no parameters in symbolic expression");

  SymbolicResonance sym;
  sym.n = static_cast<int>(parsed.size());
  sym.params.assign(letters.begin(), letters.end());
  sym.coeffs.assign(sym.n, std::vector<long long>(sym.params.size(), 0));
  for (int i = 0; i < sym.n; ++i)
    for (const auto& t : parsed[i]) {
      if (t.letter == 0) continue;
      std::size_t j = std::find(sym.params.begin(), sym.params.end(), t.letter) -
                      sym.params.begin();
      sym.coeffs[i][j] += t.coef;
    }
  return sym;
}

}  // namespace reso
