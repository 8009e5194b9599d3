#include "pitlab/io.hpp"

#include <fstream>
#include <sstream>

namespace pitlab {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
  size_t h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

mpq_class parse_rat(const std::string& tok, int line) {
  if (tok.empty()) throw ParseError("empty rational", line);
  for (size_t i = 0; i < tok.size(); ++i) {
    char ch = tok[i];
    bool ok = (ch >= '0' && ch <= '9') || ch == '/' || ((ch == '-' || ch == '+') && i == 0);
    if (!ok) throw ParseError("bad rational '" + tok + "'", line);
  }
  const std::string body = tok[0] == '+' ? tok.substr(1) : tok;  // gmp rejects leading '+'
  if (body.empty()) throw ParseError("bad rational '" + tok + "'", line);
  if (body.find('/') != std::string::npos) {
    auto parts = split(body, '/');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty() || parts[1] == "0")
      throw ParseError("bad rational '" + tok + "'", line);
  }
  mpq_class q;
  if (q.set_str(body, 10) != 0) throw ParseError("bad rational '" + tok + "'", line);
  q.canonicalize();
  return q;
}

// key=value scanning for header lines.
std::optional<std::string> header_value(const std::vector<std::string>& toks, const std::string& key) {
  for (const auto& t : toks) {
    if (t.rfind(key + "=", 0) == 0) return t.substr(key.size() + 1);
  }
  return std::nullopt;
}

bool header_flag(const std::vector<std::string>& toks, const std::string& key) {
  for (const auto& t : toks)
    if (t == key) return true;
  return false;
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

void apply_ext_header(const std::vector<std::string>& toks, int line) {
  if (auto e = header_value(toks, "ext")) {
    long d = 0;
    try {
      d = std::stol(*e);
    } catch (...) {
      throw ParseError("bad ext value '" + *e + "'", line);
    }
    try {
      ext::set_discriminant(d);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what(), line);
    }
  }
}

Poly parse_factor_line(const std::string& line_text, int n, int line);

}  // namespace

FieldElem parse_coeff(const std::string& token, int line) {
  const std::string t = trim(token);
  if (t.empty()) throw ParseError("empty coefficient", line);
  const size_t wpos = t.find('w');
  if (wpos == std::string::npos) return FieldElem(parse_rat(t, line));
  if (wpos != t.size() - 1) throw ParseError("bad coefficient '" + t + "'", line);

  std::string body = t.substr(0, wpos);  // "<rat>", "<rat>+<rat>", "<rat>-<rat>", "", "-", "+"
  // Find the sign splitting the rational part from the w part: the last
  // '+'/'-' not in position 0 and not following '/'.
  size_t splitpos = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') { splitpos = i; break; }
  }
  if (splitpos == std::string::npos) {
    // Pure w term: "w", "-w", "3w", "1/2w", "+w"
    if (body.empty() || body == "+") return FieldElem(mpq_class(0), mpq_class(1));
    if (body == "-") return FieldElem(mpq_class(0), mpq_class(-1));
    return FieldElem(mpq_class(0), parse_rat(body, line));
  }
  const std::string apart = body.substr(0, splitpos);
  std::string bpart = body.substr(splitpos);  // signed
  if (bpart == "+") bpart = "1";
  if (bpart == "-") bpart = "-1";
  return FieldElem(parse_rat(apart, line), parse_rat(bpart, line));
}

namespace {

Poly parse_lin(const std::string& rest, int n, int line) {
  auto toks = split(rest, ',');
  if (int(toks.size()) != n)
    throw ParseError("lin expects " + std::to_string(n) + " coefficients, got " +
                         std::to_string(toks.size()),
                     line);
  std::vector<FieldElem> c(n);
  for (int i = 0; i < n; ++i) c[i] = parse_coeff(toks[i], line);
  Poly p = Poly::linear(c);
  if (p.is_zero()) throw ParseError("zero factor", line);
  return p;
}

Poly parse_quad(const std::string& rest, int n, int line) {
  auto toks = split(rest, ',');
  const int want = n * (n + 1) / 2;
  if (int(toks.size()) != want)
    throw ParseError("quad expects " + std::to_string(want) + " upper-triangle coefficients", line);
  Poly p(n);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      FieldElem c = parse_coeff(toks[idx++], line);
      if (c.is_zero()) continue;
      Monomial m(n);
      m.e[i] += 1;
      m.e[j] += 1;
      p.add_term(m, c);
    }
  }
  if (p.is_zero()) throw ParseError("zero factor", line);
  return p;
}

Poly parse_poly_body(const std::string& rest, int deg, int n, int line) {
  Poly p(n);
  size_t pos = 0;
  bool any = false;
  while (pos < rest.size()) {
    while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == '\t')) ++pos;
    if (pos >= rest.size()) break;
    if (rest[pos] != '(') throw ParseError("expected '(' in poly term", line);
    size_t close = rest.find(')', pos);
    if (close == std::string::npos) throw ParseError("unterminated poly term", line);
    const std::string inner = rest.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    const size_t comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError("poly term needs 'coeff, exponents'", line);
    FieldElem c = parse_coeff(inner.substr(0, comma), line);
    auto etoks = tokens(inner.substr(comma + 1));
    if (int(etoks.size()) != n)
      throw ParseError("poly term expects " + std::to_string(n) + " exponents", line);
    Monomial m(n);
    int total = 0;
    for (int i = 0; i < n; ++i) {
      int e;
      try {
        e = std::stoi(etoks[i]);
      } catch (...) {
        throw ParseError("bad exponent '" + etoks[i] + "'", line);
      }
      if (e < 0) throw ParseError("negative exponent", line);
      m.e[i] = e;
      total += e;
    }
    if (total > deg) throw ParseError("monomial degree exceeds declared deg", line);
    p.add_term(m, c);
    any = true;
  }
  if (!any) throw ParseError("poly factor has no terms", line);
  if (p.is_zero()) throw ParseError("zero factor", line);
  if (p.total_degree() != deg) throw ParseError("declared deg does not match leading degree", line);
  return p;
}

Poly parse_factor_line(const std::string& line_text, int n, int line) {
  if (line_text.rfind("lin:", 0) == 0) return parse_lin(line_text.substr(4), n, line);
  if (line_text.rfind("quad:", 0) == 0) return parse_quad(line_text.substr(5), n, line);
  if (line_text.rfind("poly", 0) == 0) {
    size_t colon = line_text.find(':');
    if (colon == std::string::npos) throw ParseError("poly line needs ':'", line);
    auto head = tokens(line_text.substr(0, colon));
    auto degv = header_value(head, "deg");
    if (!degv) throw ParseError("poly line needs deg=<t>", line);
    int deg;
    try {
      deg = std::stoi(*degv);
    } catch (...) {
      throw ParseError("bad deg value", line);
    }
    if (deg < 0) throw ParseError("negative deg", line);
    return parse_poly_body(line_text.substr(colon + 1), deg, n, line);
  }
  throw ParseError("unrecognized factor line '" + line_text + "'", line);
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  Circuit c;
  bool saw_header = false;
  bool in_term = false;

  while (std::getline(is, raw)) {
    ++lineno;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;

    if (!saw_header) {
      auto toks = tokens(line);
      if (toks.empty() || toks[0] != "circuit") throw ParseError("expected 'circuit vars=<n>' header", lineno);
      auto v = header_value(toks, "vars");
      if (!v) throw ParseError("header needs vars=<n>", lineno);
      try {
        c.n = std::stoi(*v);
      } catch (...) {
        throw ParseError("bad vars value", lineno);
      }
      if (c.n < 1) throw ParseError("vars must be >= 1", lineno);
      apply_ext_header(toks, lineno);
      c.homogeneous = header_flag(toks, "homogeneous");
      saw_header = true;
      continue;
    }

    if (line.rfind("term", 0) == 0 && (line.size() == 4 || line[4] == ' ')) {
      auto toks = tokens(line);
      Term t;
      if (auto s = header_value(toks, "scale")) {
        t.scale = parse_coeff(*s, lineno);
        if (t.scale.is_zero()) throw ParseError("zero term scale", lineno);
      }
      c.terms.push_back(std::move(t));
      in_term = true;
      continue;
    }

    if (!in_term) throw ParseError("factor line before any 'term'", lineno);
    c.terms.back().factors.push_back(parse_factor_line(line, c.n, lineno));
  }

  if (!saw_header) throw ParseError("empty circuit file", lineno ? lineno : 1);
  if (c.terms.empty()) throw ParseError("circuit has no terms", lineno);
  for (size_t t = 0; t < c.terms.size(); ++t) {
    if (c.terms[t].factors.empty())
      throw ParseError("term " + std::to_string(t + 1) + " has no factors", lineno);
  }
  if (c.homogeneous) {
    for (const auto& t : c.terms)
      for (const auto& f : t.factors)
        if (!f.is_homogeneous()) throw ParseError("homogeneous circuit with inhomogeneous factor", lineno);
    for (size_t t = 1; t < c.terms.size(); ++t)
      if (c.terms[t].degree() != c.terms[0].degree())
        throw ParseError("homogeneous circuit with mixed term degrees", lineno);
  }
  return c;
}

namespace {

std::string factor_to_line(const Poly& f) {
  const int n = f.vars();
  if (f.total_degree() == 1 && f.is_homogeneous()) {
    std::string s = "lin: ";
    const auto c = f.linear_coeffs();
    for (int i = 0; i < n; ++i) {
      if (i) s += ", ";
      s += c[i].str();
    }
    return s;
  }
  if (f.total_degree() == 2 && f.is_homogeneous()) {
    std::string s = "quad: ";
    bool first = true;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Monomial m(n);
        m.e[i] += 1;
        m.e[j] += 1;
        if (!first) s += ", ";
        first = false;
        s += f.coeff(m).str();
      }
    }
    return s;
  }
  std::string s = "poly deg=" + std::to_string(f.total_degree()) + ":";
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    s += " (" + it->second.str() + ",";
    for (int i = 0; i < n; ++i) s += " " + std::to_string(it->first.e[i]);
    s += ")";
  }
  return s;
}

}  // namespace

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "circuit vars=" << c.n << " ext=" << ext::discriminant();
  if (c.homogeneous) os << " homogeneous";
  os << "\n";
  for (const auto& t : c.terms) {
    os << "term";
    if (!(t.scale == FieldElem(1))) os << " scale=" << t.scale.str();
    os << "\n";
    for (const auto& f : t.factors) os << factor_to_line(f) << "\n";
  }
  return os.str();
}

std::vector<Poly> parse_poly_list(const std::string& text, int* vars_out) {
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  int n = 0;
  bool saw_header = false;
  std::vector<Poly> out;
  while (std::getline(is, raw)) {
    ++lineno;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (!saw_header) {
      auto toks = tokens(line);
      if (toks.empty() || toks[0] != "polys") throw ParseError("expected 'polys vars=<n>' header", lineno);
      auto v = header_value(toks, "vars");
      if (!v) throw ParseError("header needs vars=<n>", lineno);
      try {
        n = std::stoi(*v);
      } catch (...) {
        throw ParseError("bad vars value", lineno);
      }
      if (n < 1) throw ParseError("vars must be >= 1", lineno);
      apply_ext_header(toks, lineno);
      saw_header = true;
      continue;
    }
    out.push_back(parse_factor_line(line, n, lineno));
  }
  if (!saw_header) throw ParseError("empty polynomial list", lineno ? lineno : 1);
  if (out.empty()) throw ParseError("polynomial list has no entries", lineno);
  if (vars_out) *vars_out = n;
  return out;
}

std::string serialize_poly_list(const std::vector<Poly>& polys, int vars) {
  std::ostringstream os;
  os << "polys vars=" << vars << " ext=" << ext::discriminant() << "\n";
  for (const auto& p : polys) os << factor_to_line(p) << "\n";
  return os.str();
}

Configuration parse_configuration(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  Configuration cfg;
  bool saw_header = false;
  while (std::getline(is, raw)) {
    ++lineno;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (!saw_header) {
      auto toks = tokens(line);
      if (toks.empty() || toks[0] != "points") throw ParseError("expected 'points vars=<n>' header", lineno);
      auto v = header_value(toks, "vars");
      if (!v) throw ParseError("header needs vars=<n>", lineno);
      try {
        cfg.n = std::stoi(*v);
      } catch (...) {
        throw ParseError("bad vars value", lineno);
      }
      if (cfg.n < 1) throw ParseError("vars must be >= 1", lineno);
      apply_ext_header(toks, lineno);
      saw_header = true;
      continue;
    }
    if (line.rfind("set", 0) == 0 && (line.size() == 3 || line[3] == ' ')) {
      auto toks = tokens(line);
      if (toks.size() != 2) throw ParseError("set header needs a name", lineno);
      for (const auto& [name, pts] : cfg.sets)
        if (name == toks[1]) throw ParseError("duplicate set name '" + toks[1] + "'", lineno);
      cfg.sets.emplace_back(toks[1], std::vector<ProjPoint>{});
      continue;
    }
    if (line.front() == '(') {
      if (cfg.sets.empty()) throw ParseError("point before any 'set'", lineno);
      if (line.back() != ')') throw ParseError("unterminated point", lineno);
      auto toks = split(line.substr(1, line.size() - 2), ',');
      if (int(toks.size()) != cfg.n)
        throw ParseError("point expects " + std::to_string(cfg.n) + " coordinates", lineno);
      std::vector<FieldElem> c(cfg.n);
      for (int i = 0; i < cfg.n; ++i) c[i] = parse_coeff(toks[i], lineno);
      ProjPoint p = ProjPoint::canonical(std::move(c));
      for (const auto& q : cfg.sets.back().second)
        if (p == q) throw ParseError("duplicate point within set", lineno);
      cfg.sets.back().second.push_back(std::move(p));
      continue;
    }
    throw ParseError("unrecognized line '" + line + "'", lineno);
  }
  if (!saw_header) throw ParseError("empty configuration", lineno ? lineno : 1);
  for (const auto& [name, pts] : cfg.sets)
    if (pts.empty()) throw ParseError("set '" + name + "' is empty", lineno);
  for (size_t a = 0; a < cfg.sets.size(); ++a)
    for (size_t b = a + 1; b < cfg.sets.size(); ++b)
      for (const auto& p : cfg.sets[a].second)
        for (const auto& q : cfg.sets[b].second)
          if (p == q) throw ParseError("sets '" + cfg.sets[a].first + "' and '" + cfg.sets[b].first +
                                           "' share a point",
                                       lineno);
  return cfg;
}

std::string serialize_configuration(const Configuration& cfg) {
  std::ostringstream os;
  os << "points vars=" << cfg.n << " ext=" << ext::discriminant() << "\n";
  for (const auto& [name, pts] : cfg.sets) {
    os << "set " << name << "\n";
    for (const auto& p : pts) {
      os << "(";
      for (int i = 0; i < cfg.n; ++i) {
        if (i) os << ", ";
        os << p.c[i].str();
      }
      os << ")\n";
    }
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

}  // namespace pitlab
