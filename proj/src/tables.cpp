#include "e7/tables.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace e7 {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// "v1,...,v7" with an optional "/k" suffix applying to the whole tuple
std::array<Rat, 7> parse_vec7(const std::string& field, int line_no) {
  std::string body = strip(field);
  Rat scale = 1;
  size_t last_comma = body.find_last_of(',');
  size_t tail_slash = body.find('/', last_comma == std::string::npos
                                          ? 0
                                          : last_comma + 1);
  // a slash in the last component is either that entry's denominator or a
  // whole-tuple suffix; the suffix form ends the tuple with "]/k" semantics,
  // here written as ".../k" where the final component has two slashes or the
  // slash follows a complete 7-tuple; disambiguate by component count
  std::vector<std::string> parts = split(body, ',');
  if (parts.size() != 7)
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": expected 7 components");
  // whole-tuple suffix: last component like "5/2/2" never occurs; the tables
  // use either per-entry fractions or a bare integer tuple with one suffix
  std::string last = strip(parts[6]);
  size_t s1 = last.find('/');
  if (s1 != std::string::npos) {
    size_t s2 = last.find('/', s1 + 1);
    if (s2 != std::string::npos) {
      scale = Rat(1) / parse_rat(last.substr(s2 + 1));
      parts[6] = last.substr(0, s2);
    }
  }
  (void)tail_slash;
  std::array<Rat, 7> v;
  for (int i = 0; i < 7; ++i) {
    try {
      v[i] = parse_rat(strip(parts[i]));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                               e.what());
    }
    v[i] *= scale;
  }
  return v;
}

std::array<int, 7> parse_int7(const std::string& field, int line_no) {
  auto v = parse_vec7(field, line_no);
  std::array<int, 7> out;
  for (int i = 0; i < 7; ++i) {
    if (v[i].get_den() != 1)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected integers");
    out[i] = static_cast<int>(v[i].get_num().get_si());
  }
  return out;
}

// spin LKT item: "a,b,c,d,e,f,g" or "a,...,g;step=beta;n=lo..hi"
void parse_lkt_item(const std::string& item, const Lat8& beta_varpi,
                    std::vector<KType>& out, int line_no) {
  std::vector<std::string> segs = split(item, ';');
  std::array<int, 7> base = parse_int7(segs[0], line_no);
  if (segs.size() == 1) {
    out.push_back(KType{base});
    return;
  }
  if (segs.size() != 3 || strip(segs[1]) != "step=beta" ||
      strip(segs[2]).rfind("n=", 0) != 0)
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": bad pencil shorthand");
  std::string range = strip(segs[2]).substr(2);
  size_t dots = range.find("..");
  if (dots == std::string::npos)
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": bad pencil range");
  int lo = std::stoi(range.substr(0, dots));
  int hi = std::stoi(range.substr(dots + 2));
  for (int n = lo; n <= hi; ++n) {
    std::array<int, 7> c = base;
    for (int i = 0; i < 7; ++i)
      c[i] += n * static_cast<int>(beta_varpi.v[i]);
    out.push_back(KType{c});
  }
}

}  // namespace

std::vector<TableEntry> load_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);

  // beta in varpi-coordinates is [0,0,0,0,0,1,1]
  Lat8 beta_varpi{};
  beta_varpi.v[5] = 1;
  beta_varpi.v[6] = 1;

  std::vector<TableEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> f = split(t, '|');
    if (f.size() != 7)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 7 fields, got " +
                               std::to_string(f.size()));
    TableEntry e;
    e.line_no = line_no;
    e.table_id = std::stoi(strip(f[0]));
    e.header = InfChar{parse_int7(f[1], line_no)};
    e.x = std::stol(strip(f[2]));
    std::string flags = strip(f[3]);
    for (char ch : flags) {
      if (ch == '*') e.starred = true;
      else if (ch == 'c') e.club = true;
      else if (ch == 't') e.trivial = true;
      else if (ch != '-')
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": unknown flag '" + std::string(1, ch) + "'");
    }
    e.lambda_param = parse_vec7(f[4], line_no);
    e.nu_param = parse_vec7(f[5], line_no);
    std::istringstream lk(strip(f[6]));
    std::string item;
    while (lk >> item) parse_lkt_item(item, beta_varpi, e.spin_lkts, line_no);
    if (e.spin_lkts.empty())
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": no spin LKTs");
    for (const auto& kt : e.spin_lkts)
      if (!is_k_type(kt.coeffs))
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": spin LKT " + kt.str() +
                                 " violates the parity rule");
    if (!hp_admissible(e.header))
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": header fails admissibility");
    entries.push_back(std::move(e));
  }
  if (entries.size() != 103)
    throw std::runtime_error("fixture has " + std::to_string(entries.size()) +
                             " entries, expected 103");
  return entries;
}

EntryCheck verify_entry(const NormEngine& norms, const TableEntry& e) {
  const ChamberData& cd = norms.data();
  EntryCheck res;

  Weight lambda;
  for (int i = 0; i < 7; ++i)
    lambda += cd.datum.fundamental_weights[i] * Rat(e.header.coeffs[i]);
  Rat lambda_sq = norm_sq(lambda);
  std::vector<Weight> gsys(cd.datum.simple_roots.begin(),
                           cd.datum.simple_roots.end());
  Weight lambda_dom = dominant_conjugate(lambda, gsys).dominant;

  for (const auto& mu : e.spin_lkts) {
    SpinNormReport rep = norms.spin_norm_sq(mu);
    if (rep.value_sq != lambda_sq) {
      res.spin_equals_lambda = false;
      res.failures.push_back("spin(" + mu.str() + ") = " +
                             to_string(rep.value_sq) + " != |Lambda|^2 = " +
                             to_string(lambda_sq));
      continue;
    }
    bool conj = false;
    Lat8 mv = ktype_to_lat(cd.compact, mu);
    for (int j : rep.argmin_chambers) {
      Lat8 x = norms.prv_bracket(mv - cd.chambers[j].rho_n_lat);
      for (int i = 0; i < 8; ++i) x.v[i] += cd.compact.rho_c_lat.v[i];
      Weight w = dominant_conjugate(to_weight(x), gsys).dominant;
      if (w == lambda_dom) {
        conj = true;
        break;
      }
    }
    if (!conj) {
      res.hp_conjugate = false;
      res.failures.push_back("no argmin chamber of " + mu.str() +
                             " reproduces Lambda");
    }
    PencilReport pr = pencil_min_spin(norms, mu);
    if (!pr.attaining_n.count(0)) {
      res.pencil_min_at_zero = false;
      res.failures.push_back("pencil through " + mu.str() +
                             " does not attain its minimum at n = 0");
    }
  }
  return res;
}

std::map<std::array<int, 7>, long> dirac_index_cancellation(
    const NormEngine& norms, const TableEntry& e) {
  const ChamberData& cd = norms.data();
  std::map<std::array<int, 7>, long> signed_sum;
  for (const auto& mu : e.spin_lkts) {
    SpinNormReport rep = norms.spin_norm_sq(mu);
    Lat8 mv = ktype_to_lat(cd.compact, mu);
    for (int j : rep.argmin_chambers) {
      const Chamber& ch = cd.chambers[j];
      Lat8 x = norms.prv_bracket(mv - ch.rho_n_lat);
      std::array<int, 7> key;
      for (int i = 0; i < 7; ++i)
        key[i] = static_cast<int>(dot_int(x, cd.compact.gamma_lat[i]));
      long sign = (ch.w.word.size() % 2 == 0) ? 1 : -1;
      signed_sum[key] += sign;
    }
  }
  return signed_sum;
}

std::map<Rat, int> nu_statistics(const ChamberData& cd,
                                 const std::vector<TableEntry>& entries) {
  std::map<Rat, int> stats;
  for (const auto& e : entries) {
    Rat s = 0;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        s += e.nu_param[i] * e.nu_param[j] * cd.datum.zeta_gram[i][j];
    stats[s]++;
  }
  return stats;
}

}  // namespace e7
