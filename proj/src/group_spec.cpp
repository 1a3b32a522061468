#include "supchar/group_spec.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "supchar/error.hpp"
#include "supchar/group_io.hpp"

namespace supchar {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Whitespace and commas separate tokens; parentheses are tokens; a bracketed
// list is kept whole as one token.
std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '[') {
      flush();
      int depth = 0;
      std::size_t j = i;
      for (; j < text.size(); ++j) {
        if (text[j] == '[') ++depth;
        if (text[j] == ']' && --depth == 0) break;
      }
      if (j == text.size()) throw InputError("unbalanced '[' in group spec");
      out.push_back(text.substr(i, j - i + 1));
      i = j;
    } else if (ch == '(' || ch == ')') {
      flush();
      out.emplace_back(1, ch);
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

int to_int(const std::string& s) {
  if (!is_integer(s)) throw InputError("expected an integer, got '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw InputError("integer out of range: '" + s + "'");
  }
}

class Parser {
 public:
  explicit Parser(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

  FiniteGroup parse_all() {
    FiniteGroup g = group();
    if (pos_ != tokens_.size()) throw InputError("unexpected trailing token '" + tokens_[pos_] + "'");
    return g;
  }

 private:
  const std::string& peek() const {
    static const std::string end;
    return pos_ < tokens_.size() ? tokens_[pos_] : end;
  }
  std::string take() {
    if (pos_ >= tokens_.size()) throw InputError("group spec ended early");
    return tokens_[pos_++];
  }

  FiniteGroup group() {
    std::string head = take();
    if (head == "(") {
      FiniteGroup g = group();
      if (take() != ")") throw InputError("expected ')' in group spec");
      return g;
    }
    if (head == "cyclic") return make_cyclic(to_int(take()));
    if (head == "dihedral") return dihedral(to_int(take()));
    if (head == "abelian") {
      std::vector<int> factors;
      if (!peek().empty() && peek().front() == '[') {
        try {
          factors = nlohmann::json::parse(take()).get<std::vector<int>>();
        } catch (const nlohmann::json::exception& e) {
          throw InputError(std::string("abelian factor list is not a JSON integer list: ") + e.what());
        }
      }
      while (is_integer(peek())) factors.push_back(to_int(take()));
      return make_abelian(factors);
    }
    if (head == "direct") {
      FiniteGroup a = group();
      FiniteGroup b = group();
      return direct_product(a, b);
    }
    if (head == "semidirect") {
      FiniteGroup h = group();
      FiniteGroup k = group();
      return semidirect_product(parse_psi(take(), h, k));
    }
    throw InputError("unknown group constructor '" + head + "'");
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup parse_group_spec(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) throw InputError("empty group spec");
  std::error_code ec;
  if (text.front() != '[' && text.front() != '{' && std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_group_spec(buffer.str());
  }
  if (text.front() == '{' || text.front() == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("group spec is not valid JSON: ") + e.what());
    }
    if (doc.is_array()) doc = nlohmann::json{{"label", "G"}, {"mul", doc}};
    return group_from_json(doc);
  }
  return Parser(tokenize(text)).parse_all();
}

SemidirectSpec parse_psi(const std::string& raw, const FiniteGroup& h, const FiniteGroup& k) {
  std::string text = trim(raw);
  if (text == "inversion") return inversion_action(h, k);
  if (text == "trivial") return trivial_action(h, k);
  if (text.rfind("unit:", 0) == 0) text = text.substr(5);
  if (is_integer(text)) return power_action(h, k, to_int(text));
  if (!text.empty() && text.front() == '[') {
    SemidirectSpec spec{h, k, {}};
    try {
      for (auto& perm : nlohmann::json::parse(text).get<std::vector<std::vector<int>>>()) {
        spec.psi.push_back(Automorphism{std::move(perm)});
      }
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("psi table is not a JSON list of permutations: ") + e.what());
    }
    spec.validate();
    return spec;
  }
  throw InputError("unknown psi '" + raw + "' (use inversion, trivial, a unit, or a permutation list)");
}

}  // namespace supchar
