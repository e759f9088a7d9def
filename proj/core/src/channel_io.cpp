#include "crbc/channel_io.hpp"

#include <fstream>
#include <sstream>

namespace crbc::io {

namespace {

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError(line, msg);
}

std::size_t parse_size(const std::string& tok, std::size_t lineno) {
  try {
    const long long v = std::stoll(tok);
    if (v <= 0) fail(lineno, "alphabet size must be positive: " + tok);
    return static_cast<std::size_t>(v);
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    fail(lineno, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

dmc::DmcSpec load_channel(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  dmc::DmcSpec ch;
  bool have_header = false;
  std::size_t index_count = 0;

  while (std::getline(is, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    if (!have_header) {
      std::string kind;
      ss >> kind;
      std::vector<std::string> toks;
      for (std::string t; ss >> t;) toks.push_back(t);
      if (kind == "dmc") {
        if (toks.size() != 4) fail(lineno, "dmc header needs 4 sizes");
        ch = dmc::DmcSpec::one_sided(
            parse_size(toks[0], lineno), parse_size(toks[1], lineno),
            parse_size(toks[2], lineno), parse_size(toks[3], lineno));
        index_count = 4;
      } else if (kind == "dmc2") {
        if (toks.size() != 5) fail(lineno, "dmc2 header needs 5 sizes");
        ch = dmc::DmcSpec::two_sided_channel(
            parse_size(toks[0], lineno), parse_size(toks[1], lineno),
            parse_size(toks[2], lineno), parse_size(toks[3], lineno),
            parse_size(toks[4], lineno));
        index_count = 5;
      } else {
        fail(lineno, "expected 'dmc' or 'dmc2' header, got '" + kind + "'");
      }
      have_header = true;
      continue;
    }

    std::vector<std::size_t> idx(index_count);
    const std::size_t dims[5] = {ch.nx, ch.nx1, ch.two_sided ? ch.nx2 : ch.ny1,
                                 ch.two_sided ? ch.ny1 : ch.ny2, ch.ny2};
    for (std::size_t k = 0; k < index_count; ++k) {
      long long v;
      if (!(ss >> v)) fail(lineno, "expected " + std::to_string(index_count) +
                                       " indices and a probability");
      if (v < 0 || static_cast<std::size_t>(v) >= dims[k])
        fail(lineno, "index " + std::to_string(v) + " out of range (axis " +
                         std::to_string(k) + ")");
      idx[k] = static_cast<std::size_t>(v);
    }
    double p;
    if (!(ss >> p)) fail(lineno, "missing probability value");
    if (p < 0.0) fail(lineno, "negative probability");
    std::string trailing;
    if (ss >> trailing) fail(lineno, "trailing token '" + trailing + "'");
    if (ch.two_sided)
      ch.trans(idx[0], idx[1], idx[2], idx[3], idx[4]) = p;
    else
      ch.trans(idx[0], idx[1], 0, idx[2], idx[3]) = p;
  }
  if (!have_header) fail(lineno == 0 ? 1 : lineno, "empty channel file");
  try {
    ch.validate();
  } catch (const dmc::InvalidDistribution& e) {
    fail(lineno, e.what());
  }
  return ch;
}

dmc::DmcSpec load_channel_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open channel file: " + path);
  return load_channel(f);
}

FactorFile load_factors(std::istream& is) {
  FactorFile file;
  std::string line;
  std::size_t lineno = 0;
  FactorFile::Factor* current = nullptr;
  std::string current_name;

  while (std::getline(is, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    std::string first;
    ss >> first;
    if (first == "factor") {
      std::string name;
      if (!(ss >> name)) fail(lineno, "factor header needs a name");
      FactorFile::Factor factor;
      std::size_t cells = 1;
      for (std::string t; ss >> t;) {
        factor.shape.push_back(parse_size(t, lineno));
        cells *= factor.shape.back();
      }
      if (factor.shape.empty()) fail(lineno, "factor '" + name + "' has no shape");
      if (cells > dmc::kMaxJointCells) fail(lineno, "factor too large");
      factor.values.assign(cells, 0.0);
      auto [it, inserted] = file.factors.emplace(name, std::move(factor));
      if (!inserted) fail(lineno, "duplicate factor '" + name + "'");
      current = &it->second;
      current_name = name;
      continue;
    }
    if (!current) fail(lineno, "value line before any factor header");
    std::istringstream vs(line);
    std::size_t flat = 0;
    for (std::size_t k = 0; k < current->shape.size(); ++k) {
      long long v;
      if (!(vs >> v))
        fail(lineno, "expected " + std::to_string(current->shape.size()) +
                         " indices for factor '" + current_name + "'");
      if (v < 0 || static_cast<std::size_t>(v) >= current->shape[k])
        fail(lineno, "index out of range for factor '" + current_name + "'");
      flat = flat * current->shape[k] + static_cast<std::size_t>(v);
    }
    double p;
    if (!(vs >> p)) fail(lineno, "missing value");
    if (p < 0.0) fail(lineno, "negative probability");
    std::string trailing;
    if (vs >> trailing) fail(lineno, "trailing token '" + trailing + "'");
    current->values[flat] = p;
  }
  if (file.factors.empty()) fail(1, "empty factor file");
  return file;
}

FactorFile load_factors_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open distribution file: " + path);
  return load_factors(f);
}

const FactorFile::Factor& FactorFile::require(const std::string& name) const {
  auto it = factors.find(name);
  if (it == factors.end())
    throw ParseError(0, "missing factor '" + name + "'");
  return it->second;
}

namespace {

void expect_rank(const FactorFile::Factor& f, const std::string& name,
                 std::size_t rank) {
  if (f.shape.size() != rank)
    throw ParseError(0, "factor '" + name + "' must have " +
                            std::to_string(rank) + " dimensions");
}

void expect_dim(const FactorFile::Factor& f, const std::string& name,
                std::size_t axis, std::size_t want) {
  if (f.shape[axis] != want)
    throw ParseError(0, "factor '" + name + "' axis " + std::to_string(axis) +
                            " must have size " + std::to_string(want));
}

}  // namespace

dmc::Theorem1Input make_theorem1_input(const FactorFile& f,
                                       const dmc::DmcSpec& ch) {
  const auto& pv = f.require("pv1v2");
  expect_rank(pv, "pv1v2", 2);
  const auto& px = f.require("px_given_v");
  expect_rank(px, "px_given_v", 3);
  expect_dim(px, "px_given_v", 0, pv.shape[0]);
  expect_dim(px, "px_given_v", 1, pv.shape[1]);
  expect_dim(px, "px_given_v", 2, ch.nx);
  const auto& px1 = f.require("px1");
  expect_rank(px1, "px1", 1);
  expect_dim(px1, "px1", 0, ch.nx1);
  const auto& ph = f.require("pyhat");
  expect_rank(ph, "pyhat", 4);
  expect_dim(ph, "pyhat", 0, ch.nx1);
  expect_dim(ph, "pyhat", 1, pv.shape[0]);
  expect_dim(ph, "pyhat", 2, ch.ny1);

  dmc::Theorem1Input in;
  in.nv1 = pv.shape[0];
  in.nv2 = pv.shape[1];
  in.nyh = ph.shape[3];
  in.pv1v2 = pv.values;
  in.px_given_v = px.values;
  in.px1 = px1.values;
  in.pyhat = ph.values;
  return in;
}

dmc::Theorem4Input make_theorem4_input(const FactorFile& f,
                                       const dmc::DmcSpec& ch) {
  const auto& pv = f.require("pv1v2");
  expect_rank(pv, "pv1v2", 2);
  const auto& px = f.require("px_given_v");
  expect_rank(px, "px_given_v", 3);
  expect_dim(px, "px_given_v", 2, ch.nx);
  const auto& pu = f.require("pu");
  expect_rank(pu, "pu", 1);
  const auto& px1u = f.require("px1_given_u");
  expect_rank(px1u, "px1_given_u", 2);
  expect_dim(px1u, "px1_given_u", 0, pu.shape[0]);
  expect_dim(px1u, "px1_given_u", 1, ch.nx1);
  const auto& ph = f.require("pyhat");
  expect_rank(ph, "pyhat", 4);
  expect_dim(ph, "pyhat", 0, pu.shape[0]);
  expect_dim(ph, "pyhat", 1, pv.shape[0]);
  expect_dim(ph, "pyhat", 2, ch.ny1);

  dmc::Theorem4Input in;
  in.nv1 = pv.shape[0];
  in.nv2 = pv.shape[1];
  in.nu = pu.shape[0];
  in.nyh = ph.shape[3];
  in.pv1v2 = pv.values;
  in.px_given_v = px.values;
  in.pu = pu.values;
  in.px1_given_u = px1u.values;
  in.pyhat = ph.values;
  return in;
}

dmc::Theorem5Input make_theorem5_input(const FactorFile& f,
                                       const dmc::DmcSpec& ch) {
  const auto& pv = f.require("pv1v2");
  expect_rank(pv, "pv1v2", 2);
  const auto& px = f.require("px_given_v");
  expect_rank(px, "px_given_v", 3);
  expect_dim(px, "px_given_v", 2, ch.nx);
  const auto& p1 = f.require("pu1x1");
  expect_rank(p1, "pu1x1", 2);
  expect_dim(p1, "pu1x1", 1, ch.nx1);
  const auto& ph1 = f.require("pyhat1");
  expect_rank(ph1, "pyhat1", 3);
  expect_dim(ph1, "pyhat1", 0, p1.shape[0]);
  expect_dim(ph1, "pyhat1", 1, ch.ny1);
  const auto& p2 = f.require("pu2x2");
  expect_rank(p2, "pu2x2", 2);
  expect_dim(p2, "pu2x2", 1, ch.nx2);
  const auto& ph2 = f.require("pyhat2");
  expect_rank(ph2, "pyhat2", 3);
  expect_dim(ph2, "pyhat2", 0, p2.shape[0]);
  expect_dim(ph2, "pyhat2", 1, ch.ny2);

  dmc::Theorem5Input in;
  in.nv1 = pv.shape[0];
  in.nv2 = pv.shape[1];
  in.nu1 = p1.shape[0];
  in.nu2 = p2.shape[0];
  in.nyh1 = ph1.shape[2];
  in.nyh2 = ph2.shape[2];
  in.pv1v2 = pv.values;
  in.px_given_v = px.values;
  in.pu1x1 = p1.values;
  in.pyhat1 = ph1.values;
  in.pu2x2 = p2.values;
  in.pyhat2 = ph2.values;
  return in;
}

dmc::Theorem2Input make_theorem2_input(const FactorFile& f,
                                       const dmc::DmcSpec& ch) {
  const auto& pv = f.require("pv1v2");
  expect_rank(pv, "pv1v2", 2);
  const std::size_t nv1 = pv.shape[0], nv2 = pv.shape[1];
  const auto& pu = f.require("pu_given_v");
  expect_rank(pu, "pu_given_v", 3);
  expect_dim(pu, "pu_given_v", 0, nv1);
  expect_dim(pu, "pu_given_v", 1, nv2);
  const std::size_t nu = pu.shape[2];
  const auto& pin = f.require("pxx1_given_v");
  expect_rank(pin, "pxx1_given_v", 4);
  expect_dim(pin, "pxx1_given_v", 0, nv1);
  expect_dim(pin, "pxx1_given_v", 1, nv2);
  expect_dim(pin, "pxx1_given_v", 2, ch.nx);
  expect_dim(pin, "pxx1_given_v", 3, ch.nx1);

  // Compose p(u,v1,v2,x,x1) = p(v1,v2) p(u|v1,v2) p(x,x1|v1,v2) and
  // present it as the (conditional, input marginal) pair.
  const std::size_t nin = ch.nx * ch.nx1;
  std::vector<double> joint(nu * nv1 * nv2 * nin, 0.0);
  std::vector<double> input(nin, 0.0);
  for (std::size_t v1 = 0; v1 < nv1; ++v1)
    for (std::size_t v2 = 0; v2 < nv2; ++v2) {
      const std::size_t v = v1 * nv2 + v2;
      for (std::size_t u = 0; u < nu; ++u)
        for (std::size_t i = 0; i < nin; ++i) {
          const double q =
              pv.values[v] * pu.values[v * nu + u] * pin.values[v * nin + i];
          joint[(u * nv1 * nv2 + v) * nin + i] = q;
          input[i] += q;
        }
    }

  dmc::Theorem2Input in;
  in.nu = nu;
  in.nv1 = nv1;
  in.nv2 = nv2;
  in.input = input;
  in.aux_given_input.assign(nin * nu * nv1 * nv2, 0.0);
  for (std::size_t i = 0; i < nin; ++i) {
    if (input[i] <= dmc::kStructuralZero) {
      // Unreachable input pair: attach an arbitrary valid conditional.
      for (std::size_t u = 0; u < nu; ++u)
        for (std::size_t v = 0; v < nv1 * nv2; ++v)
          in.aux_given_input[i * nu * nv1 * nv2 + u * nv1 * nv2 + v] =
              1.0 / static_cast<double>(nu * nv1 * nv2);
      continue;
    }
    for (std::size_t u = 0; u < nu; ++u)
      for (std::size_t v = 0; v < nv1 * nv2; ++v)
        in.aux_given_input[i * nu * nv1 * nv2 + u * nv1 * nv2 + v] =
            joint[(u * nv1 * nv2 + v) * nin + i] / input[i];
  }
  return in;
}

std::vector<double> make_input_dist(const FactorFile& f,
                                    const dmc::DmcSpec& ch) {
  const auto& p = f.require("pxx1");
  expect_rank(p, "pxx1", 2);
  expect_dim(p, "pxx1", 0, ch.nx);
  expect_dim(p, "pxx1", 1, ch.nx1);
  return p.values;
}

}  // namespace crbc::io
