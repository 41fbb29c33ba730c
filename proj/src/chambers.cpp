#include "e7/chambers.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace e7 {

const Chamber& ChamberData::by_rho_n(const std::array<int, 7>& varpi) const {
  for (const auto& ch : chambers)
    if (ch.rho_n_varpi == varpi) return ch;
  throw std::domain_error("no chamber with the given rho_n");
}

std::shared_ptr<const ChamberData> build_chamber_data(Exec exec) {
  auto cd = std::make_shared<ChamberData>();
  cd->datum = build_root_datum();
  cd->compact = build_compact_datum(cd->datum);
  const RootDatum& d = cd->datum;
  const CompactDatum& k = cd->compact;

  // W(g) order and the 63 k-dominant orbit points
  std::vector<OrbVec> ggens;
  for (const auto& a : d.simple_roots) ggens.push_back(to_orbvec(a));
  Orbit orb = orbit_walk(ggens, to_orbvec(d.rho), exec);
  cd->weyl_order = orb.points.size();
  if (cd->weyl_order != 2903040)
    throw std::runtime_error("W(E7) orbit size is " +
                             std::to_string(cd->weyl_order));

  std::vector<OrbVec> kgens;
  for (const auto& g : k.gamma) kgens.push_back(to_orbvec(g));
  cd->weyl_k_order = orbit_walk(kgens, to_orbvec(k.rho_c), exec).points.size();
  if (cd->weyl_k_order != 46080)
    throw std::runtime_error("W(k) orbit size is " +
                             std::to_string(cd->weyl_k_order));

  std::vector<Weight> rho_js;
  for (const auto& p : orb.points) {
    bool dom = true;
    for (const auto& g : kgens) {
      int32_t s = 0;
      for (int i = 0; i < 8; ++i) s += int32_t(p[i]) * g[i];
      if (s < 0) {
        dom = false;
        break;
      }
    }
    if (dom) rho_js.push_back(from_orbvec(p));
  }
  if (rho_js.size() != 63)
    throw std::runtime_error("found " + std::to_string(rho_js.size()) +
                             " k-dominant chamber points, not 63");

  std::vector<Weight> gsys(d.simple_roots.begin(), d.simple_roots.end());
  std::vector<Chamber> chambers;
  for (const auto& rj : rho_js) {
    Chamber ch;
    ch.rho_j = rj;
    ch.rho_n_j = rj - k.rho_c;
    auto vc = k.varpi_coords(ch.rho_n_j);
    for (int i = 0; i < 7; ++i) {
      if (vc[i].get_den() != 1 || vc[i] < 0)
        throw std::runtime_error("rho_n is not a dominant integral k-weight");
      ch.rho_n_varpi[i] = static_cast<int>(vc[i].get_num().get_si());
    }
    DominantResult dr = dominant_conjugate(rj, gsys);
    if (!(dr.dominant == d.rho))
      throw std::runtime_error("chamber point is not W-conjugate to rho");
    ch.w = dr.element.inverse();
    if (!(ch.w.apply(d.rho) == rj))
      throw std::logic_error("w does not map rho to the chamber point");
    for (int i = 0; i < 7; ++i) {
      ch.simple_roots_j[i] = ch.w.apply(d.simple_roots[i]);
      ch.fw_j[i] = ch.w.apply(d.fundamental_weights[i]);
    }
    ch.dim_rho_n = weyl_dimension(ch.rho_n_j, k.positive_k_roots);
    chambers.push_back(std::move(ch));
  }

  std::sort(chambers.begin(), chambers.end(),
            [](const Chamber& a, const Chamber& b) {
              return a.rho_n_varpi < b.rho_n_varpi;
            });
  for (size_t j = 0; j < chambers.size(); ++j) {
    Chamber& ch = chambers[j];
    ch.index = static_cast<int>(j);
    ch.rho_j_lat = to_lat(ch.rho_j);
    ch.rho_n_lat = to_lat(ch.rho_n_j);
    ch.two_rho_n_lat = ch.rho_n_lat + ch.rho_n_lat;
    for (int i = 0; i < 7; ++i) {
      ch.simple_roots_lat[i] = to_lat(ch.simple_roots_j[i]);
      ch.fw_lat[i] = to_lat(ch.fw_j[i]);
    }
  }
  if (!chambers[0].w.word.empty())
    throw std::logic_error("chamber 0 is not the identity coset");

  cd->chambers = std::move(chambers);
  cd->max_rho_n_sq = 0;
  for (const auto& ch : cd->chambers)
    cd->max_rho_n_sq = std::max(cd->max_rho_n_sq, norm_sq(ch.rho_n_j));
  cd->two_rho_c_lat = k.rho_c_lat + k.rho_c_lat;
  return cd;
}

std::set<int> chambers_containing(const ChamberData& cd, const Weight& v) {
  if (!cd.compact.is_k_dominant(v))
    throw std::domain_error("chambers_containing: vector is not k-dominant");
  std::set<int> res;
  for (const auto& ch : cd.chambers) {
    bool in = true;
    for (int i = 0; i < 7 && in; ++i)
      if (dot(v, ch.simple_roots_j[i]) < 0) in = false;
    if (in) res.insert(ch.index);
  }
  if (res.empty())
    throw std::logic_error("k-dominant vector lies in no chamber cone");
  return res;
}

bool validate_spin_module(const std::vector<Chamber>& chambers) {
  Int sum = 0;
  for (const auto& ch : chambers) sum += ch.dim_rho_n;
  return sum == Int(1) << 32;
}

// --- cache -----------------------------------------------------------------

namespace {

constexpr char kMagic[8] = {'E', '7', 'C', 'H', 'A', 'M', 'B', '1'};

void put_u64(std::FILE* f, uint64_t x) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = (x >> (8 * i)) & 0xff;
  std::fwrite(b, 1, 8, f);
}

uint64_t get_u64(std::FILE* f) {
  unsigned char b[8];
  if (std::fread(b, 1, 8, f) != 8) throw std::runtime_error("cache truncated");
  uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= uint64_t(b[i]) << (8 * i);
  return x;
}

void put_rat(std::FILE* f, const Rat& r) {
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
    throw std::runtime_error("cache rational overflow");
  put_u64(f, static_cast<uint64_t>(r.get_num().get_si()));
  put_u64(f, static_cast<uint64_t>(r.get_den().get_si()));
}

Rat get_rat(std::FILE* f) {
  int64_t n = static_cast<int64_t>(get_u64(f));
  int64_t d = static_cast<int64_t>(get_u64(f));
  if (d <= 0) throw std::runtime_error("cache rational corrupt");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

void put_weight(std::FILE* f, const Weight& w) {
  for (int i = 0; i < 8; ++i) put_rat(f, w.c[i]);
}

Weight get_weight(std::FILE* f) {
  Weight w;
  for (int i = 0; i < 8; ++i) w.c[i] = get_rat(f);
  return w;
}

}  // namespace

uint64_t datum_content_hash(const RootDatum& d) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const auto& a : d.simple_roots)
    for (int i = 0; i < 8; ++i) {
      mix(static_cast<uint64_t>(a.c[i].get_num().get_si()));
      mix(static_cast<uint64_t>(a.c[i].get_den().get_si()));
    }
  return h;
}

void save_chamber_cache(const ChamberData& cd, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot write " + path);
  std::fwrite(kMagic, 1, 8, f);
  put_u64(f, datum_content_hash(cd.datum));
  put_u64(f, cd.weyl_order);
  put_u64(f, cd.weyl_k_order);
  put_u64(f, cd.chambers.size());
  for (const auto& ch : cd.chambers) {
    put_u64(f, ch.w.word.size());
    std::fwrite(ch.w.word.data(), 1, ch.w.word.size(), f);
    put_weight(f, ch.rho_j);
    put_weight(f, ch.rho_n_j);
    for (int i = 0; i < 7; ++i) put_weight(f, ch.simple_roots_j[i]);
    for (int i = 0; i < 7; ++i) put_weight(f, ch.fw_j[i]);
  }
  std::fclose(f);
}

std::shared_ptr<const ChamberData> load_chamber_cache(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot read " + path);
  auto close = [](std::FILE* fp) { std::fclose(fp); };
  std::unique_ptr<std::FILE, decltype(close)> guard(f, close);

  char magic[8];
  if (std::fread(magic, 1, 8, f) != 8 || !std::equal(magic, magic + 8, kMagic))
    throw std::runtime_error("bad chamber cache magic");

  auto cd = std::make_shared<ChamberData>();
  cd->datum = build_root_datum();
  cd->compact = build_compact_datum(cd->datum);
  if (get_u64(f) != datum_content_hash(cd->datum))
    throw std::runtime_error("chamber cache is for a different datum");
  cd->weyl_order = get_u64(f);
  cd->weyl_k_order = get_u64(f);
  size_t n = get_u64(f);
  if (n != 63) throw std::runtime_error("chamber cache count != 63");

  std::vector<Weight> gsys(cd->datum.simple_roots.begin(),
                           cd->datum.simple_roots.end());
  for (size_t j = 0; j < n; ++j) {
    Chamber ch;
    ch.index = static_cast<int>(j);
    size_t wl = get_u64(f);
    ch.w.word.resize(wl);
    if (wl && std::fread(ch.w.word.data(), 1, wl, f) != wl)
      throw std::runtime_error("cache truncated");
    GroupElement g = GroupElement::identity();
    g.word.clear();
    for (uint8_t letter : ch.w.word)
      g = g * cd->datum.simple_reflections[letter];
    g.word = ch.w.word;
    ch.w = g;
    ch.rho_j = get_weight(f);
    ch.rho_n_j = get_weight(f);
    for (int i = 0; i < 7; ++i) ch.simple_roots_j[i] = get_weight(f);
    for (int i = 0; i < 7; ++i) ch.fw_j[i] = get_weight(f);

    if (!(ch.w.apply(cd->datum.rho) == ch.rho_j))
      throw std::runtime_error("chamber cache fails w(rho) = rho_j");
    auto vc = cd->compact.varpi_coords(ch.rho_n_j);
    for (int i = 0; i < 7; ++i)
      ch.rho_n_varpi[i] = static_cast<int>(vc[i].get_num().get_si());
    ch.dim_rho_n = weyl_dimension(ch.rho_n_j, cd->compact.positive_k_roots);
    ch.rho_j_lat = to_lat(ch.rho_j);
    ch.rho_n_lat = to_lat(ch.rho_n_j);
    ch.two_rho_n_lat = ch.rho_n_lat + ch.rho_n_lat;
    for (int i = 0; i < 7; ++i) {
      ch.simple_roots_lat[i] = to_lat(ch.simple_roots_j[i]);
      ch.fw_lat[i] = to_lat(ch.fw_j[i]);
    }
    cd->chambers.push_back(std::move(ch));
  }
  for (size_t j = 1; j < cd->chambers.size(); ++j)
    if (!(cd->chambers[j - 1].rho_n_varpi < cd->chambers[j].rho_n_varpi))
      throw std::runtime_error("chamber cache is not sorted");
  cd->max_rho_n_sq = 0;
  for (const auto& ch : cd->chambers)
    cd->max_rho_n_sq = std::max(cd->max_rho_n_sq, norm_sq(ch.rho_n_j));
  cd->two_rho_c_lat = cd->compact.rho_c_lat + cd->compact.rho_c_lat;
  return cd;
}

std::shared_ptr<const ChamberData> chamber_data_cached(
    const std::string& cache_dir, Exec exec) {
  if (cache_dir.empty()) return build_chamber_data(exec);
  std::filesystem::path p = std::filesystem::path(cache_dir) / "chambers.bin";
  if (std::filesystem::exists(p)) {
    try {
      return load_chamber_cache(p.string());
    } catch (const std::exception&) {
      // fall through and rebuild
    }
  }
  auto cd = build_chamber_data(exec);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (!ec) save_chamber_cache(*cd, p.string());
  return cd;
}

}  // namespace e7
