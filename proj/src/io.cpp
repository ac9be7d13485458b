#include "qchroma/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qchroma {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(strip(s.substr(pos, next == std::string::npos ? std::string::npos
                                                                : next - pos)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

int parse_int(const std::string& tok, const char* what) {
  if (tok.empty()) throw std::invalid_argument(std::string(what) + ": empty number");
  long v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw std::invalid_argument(std::string(what) + ": bad digit in '" + tok + "'");
    v = v * 10 + (c - '0');
    if (v > 1000000) throw std::invalid_argument(std::string(what) + ": number too large");
  }
  return static_cast<int>(v);
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& body, int* max_v) {
  std::vector<std::pair<int, int>> edges;
  *max_v = 0;
  if (strip(body).empty()) return edges;
  for (const std::string& tok : split(body, ',')) {
    auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("graph literal: edge '" + tok + "' wants a-b form");
    int a = parse_int(strip(tok.substr(0, dash)), "graph literal");
    int b = parse_int(strip(tok.substr(dash + 1)), "graph literal");
    if (a == b) throw std::invalid_argument("graph literal: loop edge");
    edges.emplace_back(std::min(a, b), std::max(a, b));
    *max_v = std::max({*max_v, a, b});
  }
  return edges;
}

}  // namespace

SimpleGraph parse_simple_graph(const std::string& text, std::optional<int> n) {
  const std::string t = strip(text);
  if (t.rfind("m=", 0) == 0) {
    std::vector<int> m;
    for (const std::string& tok : split(t.substr(2), ','))
      m.push_back(parse_int(tok, "graph literal"));
    if (n && *n != static_cast<int>(m.size()))
      throw std::invalid_argument("graph literal: n disagrees with the m-vector length");
    return IntervalGraph(std::move(m)).simple();
  }
  if (t.rfind("e=", 0) == 0) {
    int max_v = 0;
    auto edges = parse_edge_list(t.substr(2), &max_v);
    int nn = n.value_or(max_v);
    if (nn < max_v)
      throw std::invalid_argument("graph literal: edge endpoint exceeds n");
    if (nn < 1) throw std::invalid_argument("graph literal: empty edge list needs --n");
    return SimpleGraph(nn, edges);
  }
  throw std::invalid_argument("graph literal: want m=... or e=...");
}

IntervalGraph parse_interval_graph(const std::string& text, std::optional<int> n) {
  const std::string t = strip(text);
  if (t.rfind("m=", 0) == 0) {
    std::vector<int> m;
    for (const std::string& tok : split(t.substr(2), ','))
      m.push_back(parse_int(tok, "graph literal"));
    if (n && *n != static_cast<int>(m.size()))
      throw std::invalid_argument("graph literal: n disagrees with the m-vector length");
    return IntervalGraph(std::move(m));
  }
  return interval_from_simple(parse_simple_graph(t, n));
}

Word parse_word(const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) throw std::invalid_argument("word literal: empty");
  Word w;
  if (t.find(',') == std::string::npos) {
    for (char c : t) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("word literal: digit form wants digits 1-9");
      w.push_back(c - '0');
    }
  } else {
    for (const std::string& tok : split(t, ',')) {
      int v = parse_int(tok, "word literal");
      if (v < 1) throw std::invalid_argument("word literal: letters start at 1");
      w.push_back(v);
    }
  }
  return w;
}

std::string format_word(const Word& w) {
  bool digits = std::all_of(w.begin(), w.end(), [](int v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !digits) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

std::string comp_exp_string(const Composition& a) {
  std::string out = "(";
  for (int i = 0; i < a.length();) {
    int j = i;
    while (j < a.length() && a.part(j) == a.part(i)) ++j;
    if (i) out += ",";
    out += std::to_string(a.part(i));
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

namespace {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::M: return "M";
    case Basis::L: return "L";
    default: return "Psi";
  }
}

// Bare string for one coefficient: polynomial text when it reduces to a
// polynomial, else the (num)/(den) form.
std::string coeff_string(const QRat& c) {
  return c.is_polynomial() ? c.as_polynomial().str() : c.str();
}

bool needs_parens(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('-') != std::string::npos;
}

}  // namespace

std::string qsym_text(const QSymElem& e) {
  std::string out;
  for (std::uint64_t mask = 0; mask < e.term_count_bound(); ++mask) {
    const QRat& c = e.coeff_mask(mask);
    if (c == QRat()) continue;
    if (!out.empty()) out += " + ";
    std::string cs;
    if (c.is_polynomial()) {
      QPoly p = c.as_polynomial();
      if (p == QPoly(1)) {
        cs = "";
      } else {
        cs = p.str();
        if (needs_parens(cs)) cs = "(" + cs + ")";
        cs += " ";
      }
    } else {
      cs = c.str() + " ";
    }
    out += cs + basis_name(e.basis()) + "_" +
           comp_exp_string(comp_of(e.degree(), mask));
  }
  return out.empty() ? "0" : out;
}

std::string qsym_json(const QSymElem& e, int indent) {
  nlohmann::json j;
  j["degree"] = e.degree();
  j["basis"] = basis_name(e.basis());
  j["terms"] = nlohmann::json::array();
  for (std::uint64_t mask = 0; mask < e.term_count_bound(); ++mask) {
    const QRat& c = e.coeff_mask(mask);
    if (c == QRat()) continue;
    nlohmann::json term;
    term["comp"] = comp_of(e.degree(), mask).parts();
    term["coeff"] = coeff_string(c);
    j["terms"].push_back(std::move(term));
  }
  return j.dump(indent);
}

std::string graph_json(const IntervalGraph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["m"] = g.m();
  return j.dump(2);
}

std::string realization_text(const IntervalGraph& g) {
  std::ostringstream out;
  const auto intervals = interval_realization(g);
  for (int v = 1; v <= g.n(); ++v)
    out << "I_" << v << " = [" << intervals[v - 1].lo << ", "
        << intervals[v - 1].hi << "]\n";
  return out.str();
}

}  // namespace qchroma
