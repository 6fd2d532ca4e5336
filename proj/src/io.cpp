// File formats: ideal files, Clifford-system matrix files, and quartic-family
// files.  All loaders throw Error(io) for filesystem problems and
// Error(parse) with a line number for malformed content.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "isopar/error.hpp"
#include "isopar/io.hpp"
#include "isopar/parse.hpp"

namespace isopar {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// All content lines of the file: comments stripped, blanks dropped,
// original line numbers kept for error messages.
std::vector<std::pair<int, std::string>> content_lines(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Error::Kind::io, "cannot open " + path);
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (!t.empty()) out.emplace_back(no, t);
  }
  return out;
}

[[noreturn]] void bad_line(const std::string& path, int no,
                           const std::string& what) {
  fail(Error::Kind::parse, path + ":" + std::to_string(no) + ": " + what);
}

// "ring x1, x2, x3" -> variable names
std::vector<std::string> split_names(const std::string& body) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : body + ",") {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return names;
}

// "rational" or "quadext:d"
long parse_scalar_mode(const std::string& path, int no,
                       const std::string& body) {
  if (body == "rational") return 0;
  if (body.rfind("quadext:", 0) == 0) {
    try {
      size_t used = 0;
      long d = std::stol(body.substr(8), &used);
      if (used != body.size() - 8 || d < 2)
        bad_line(path, no, "quadext parameter must be an integer >= 2");
      return d;
    } catch (const Error&) {
      throw;
    } catch (...) {
      bad_line(path, no, "quadext parameter must be an integer >= 2");
    }
  }
  bad_line(path, no, "scalar mode must be 'rational' or 'quadext:d'");
}

Scalar parse_rational(const std::string& path, int no,
                      const std::string& tok) {
  try {
    mpq_class q(tok);
    q.canonicalize();
    return Scalar(q);
  } catch (...) {
    bad_line(path, no, "bad rational literal '" + tok + "'");
  }
}

}  // namespace

IdealFile load_ideal_file(const std::string& path) {
  auto lines = content_lines(path);
  if (lines.empty() || lines[0].second.rfind("ring ", 0) != 0)
    fail(Error::Kind::parse, path + ": first content line must be 'ring ...'");

  IdealFile f;
  std::vector<std::string> names = split_names(lines[0].second.substr(5));
  if (names.empty()) bad_line(path, lines[0].first, "ring needs variables");
  f.ring = Ring::make(names);

  size_t i = 1;
  if (i < lines.size() && lines[i].second.rfind("scalar ", 0) == 0) {
    f.quadext_d =
        parse_scalar_mode(path, lines[i].first, trim(lines[i].second.substr(7)));
    ++i;
  }
  for (; i < lines.size(); ++i) {
    try {
      f.gens.push_back(parse_poly(lines[i].second, f.ring, f.quadext_d));
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::parse) throw;
      bad_line(path, lines[i].first, e.what());
    }
  }
  if (f.gens.empty())
    fail(Error::Kind::parse, path + ": no generators");
  return f;
}

std::vector<Mat<Scalar>> load_system_file(const std::string& path) {
  auto lines = content_lines(path);
  if (lines.empty()) fail(Error::Kind::parse, path + ": empty file");
  std::istringstream head(lines[0].second);
  std::string tag;
  int count = 0, rows = 0, cols = 0;
  head >> tag >> count >> rows >> cols;
  if (!head || tag != "system" || count < 1 || rows < 1 || cols < 1)
    bad_line(path, lines[0].first, "header must be 'system <count> <rows> <cols>'");
  if (lines.size() != 1 + static_cast<size_t>(count) * rows)
    fail(Error::Kind::parse,
         path + ": expected " + std::to_string(count * rows) +
             " matrix rows, found " + std::to_string(lines.size() - 1));

  std::vector<Mat<Scalar>> ps;
  size_t li = 1;
  for (int c = 0; c < count; ++c) {
    Mat<Scalar> m(rows, cols);
    for (int i = 0; i < rows; ++i, ++li) {
      std::istringstream row(lines[li].second);
      std::string tok;
      for (int j = 0; j < cols; ++j) {
        if (!(row >> tok))
          bad_line(path, lines[li].first, "row needs " + std::to_string(cols) +
                                              " entries");
        m.at(i, j) = parse_rational(path, lines[li].first, tok);
      }
      if (row >> tok)
        bad_line(path, lines[li].first, "extra entry '" + tok + "'");
    }
    ps.push_back(std::move(m));
  }
  return ps;
}

void save_system_file(const std::string& path,
                      const std::vector<Mat<Scalar>>& ps) {
  if (ps.empty())
    fail(Error::Kind::precondition, "cannot save an empty system");
  for (const auto& m : ps)
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j)
        if (!m.at(i, j).is_rational())
          fail(Error::Kind::unsupported,
               "system files hold rational entries only");
  std::ofstream out(path);
  if (!out) fail(Error::Kind::io, "cannot write " + path);
  out << "system " << ps.size() << " " << ps[0].rows << " " << ps[0].cols
      << "\n";
  for (const auto& m : ps)
    for (int i = 0; i < m.rows; ++i) {
      for (int j = 0; j < m.cols; ++j)
        out << (j ? " " : "") << m.at(i, j).str();
      out << "\n";
    }
  if (!out) fail(Error::Kind::io, "write failed for " + path);
}

CMData load_cm_file(const std::string& path) {
  auto lines = content_lines(path);
  if (lines.empty() || lines[0].second.rfind("ring ", 0) != 0)
    fail(Error::Kind::parse, path + ": first content line must be 'ring ...'");

  CMData cm;
  std::vector<std::string> names = split_names(lines[0].second.substr(5));
  if (names.empty()) bad_line(path, lines[0].first, "ring needs variables");
  cm.ring = Ring::make(names);

  long quadext_d = 0;
  bool have_f = false, have_g = false, have_m1 = false, have_m2 = false;
  auto int_field = [&](size_t i, const std::string& body) {
    try {
      size_t used = 0;
      int v = std::stoi(body, &used);
      if (used != body.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      bad_line(path, lines[i].first, "expected an integer, got '" + body + "'");
    }
  };
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::string& s = lines[i].second;
    if (s.rfind("scalar ", 0) == 0) {
      quadext_d = parse_scalar_mode(path, lines[i].first, trim(s.substr(7)));
    } else if (s.rfind("g ", 0) == 0) {
      cm.g = int_field(i, trim(s.substr(2)));
      have_g = true;
    } else if (s.rfind("m1 ", 0) == 0) {
      cm.m1 = int_field(i, trim(s.substr(3)));
      have_m1 = true;
    } else if (s.rfind("m2 ", 0) == 0) {
      cm.m2 = int_field(i, trim(s.substr(3)));
      have_m2 = true;
    } else if (s.rfind("provenance ", 0) == 0) {
      cm.provenance = trim(s.substr(11));
    } else {
      if (have_f) bad_line(path, lines[i].first, "second expression line");
      try {
        cm.F = parse_poly(s, cm.ring, quadext_d);
      } catch (const Error& e) {
        if (e.kind() != Error::Kind::parse) throw;
        bad_line(path, lines[i].first, e.what());
      }
      have_f = true;
    }
  }
  if (!have_f) fail(Error::Kind::parse, path + ": missing the quartic");
  if (!have_g || !have_m1 || !have_m2)
    fail(Error::Kind::parse, path + ": metadata block needs g, m1 and m2");
  if (cm.provenance.empty()) cm.provenance = "imported";
  if (cm.g != 4)
    fail(Error::Kind::unsupported, "only quartic families (g = 4) are supported");
  if (cm.F.degree() != 4 || !cm.F.is_homogeneous())
    fail(Error::Kind::precondition,
         path + ": the family polynomial must be homogeneous of degree 4");
  cm.m2_phrase = cm.m2;
  cm.multiplicity_mismatch = false;
  return cm;
}

void save_cm_file(const std::string& path, const CMData& cm) {
  std::ofstream out(path);
  if (!out) fail(Error::Kind::io, "cannot write " + path);
  out << "ring";
  for (int i = 0; i < cm.ring->n(); ++i)
    out << (i ? ", " : " ") << cm.ring->vars[i];
  out << "\n";
  long d = cm.F.ext();
  if (d != 0) out << "scalar quadext:" << d << "\n";
  out << "g " << cm.g << "\n";
  out << "m1 " << cm.m1 << "\n";
  out << "m2 " << cm.m2 << "\n";
  out << "provenance " << cm.provenance << "\n";
  out << cm.F.str() << "\n";
  if (!out) fail(Error::Kind::io, "write failed for " + path);
}

SVec parse_rational_vector(const std::string& text) {
  SVec v;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      std::string t = trim(cur);
      if (t.empty())
        fail(Error::Kind::parse, "empty component in vector '" + text + "'");
      try {
        mpq_class q(t);
        q.canonicalize();
        v.push_back(Scalar(q));
      } catch (const Error&) {
        throw;
      } catch (...) {
        fail(Error::Kind::parse, "bad rational literal '" + t + "'");
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (v.empty()) fail(Error::Kind::parse, "empty vector");
  return v;
}

}  // namespace isopar
