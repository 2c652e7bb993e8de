#include "sdalab/model.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "sdalab/error.hpp"

namespace sdalab::model {

using rigorous::compare;
using rigorous::Ordering;
using json = nlohmann::json;

IntegerPoint::IntegerPoint(std::vector<mpz_class> coords) : x_(std::move(coords)) {
  auto first = std::find_if(x_.begin(), x_.end(), [](const mpz_class& v) { return sgn(v) != 0; });
  if (first != x_.end() && sgn(*first) < 0)
    for (auto& v : x_) v = -v;
  for (const auto& v : x_) norm_sq_ += v * v;
}

IntegerPoint::IntegerPoint(std::initializer_list<long> coords)
    : IntegerPoint(std::vector<mpz_class>(coords.begin(), coords.end())) {}

std::string IntegerPoint::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < x_.size(); ++k) {
    if (k) s += ",";
    s += x_[k].get_str();
  }
  return s + ")";
}

bool operator<(const IntegerPoint& a, const IntegerPoint& b) {
  return std::lexicographical_compare(a.x_.begin(), a.x_.end(), b.x_.begin(), b.x_.end());
}

TargetPoint::TargetPoint(std::vector<RigorousReal> coords, Independence status)
    : coords_(std::move(coords)), status_(status) {
  if (coords_.size() < 2) fail(Errc::DomainError, "target needs at least two coordinates");
  if (rigorous::certified_sign(coords_[0]) == 0)
    fail(Errc::DomainError, "xi_0 cannot be certified nonzero");
  abs_xi0_ = abs(coords_[0]);
  ratios_.reserve(coords_.size());
  ratios_.push_back(RigorousReal::integer(1));
  for (std::size_t k = 1; k < coords_.size(); ++k) ratios_.push_back(coords_[k] / coords_[0]);
}

ApproxSet ApproxSet::full() { return ApproxSet(); }

ApproxSet ApproxSet::congruence(const mpz_class& modulus,
                                const std::map<std::size_t, std::vector<mpz_class>>& residues) {
  if (modulus < 1) fail(Errc::DomainError, "congruence modulus must be positive");
  ApproxSet s;
  s.kind_ = Kind::Congruence;
  s.modulus_ = modulus;
  for (const auto& [k, list] : residues) {
    if (list.empty()) fail(Errc::DomainError, "empty residue list for coordinate " + std::to_string(k));
    std::vector<mpz_class> r;
    for (const auto& v : list) {
      mpz_class m;
      mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
      r.push_back(m);
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    s.residues_[k] = std::move(r);
  }
  return s;
}

ApproxSet ApproxSet::sublattice(const linalg::IntMatrix& basis) {
  if (basis.rows() == 0) fail(Errc::DomainError, "sublattice basis is empty");
  if (linalg::rank(basis) != basis.rows())
    fail(Errc::DomainError, "sublattice basis vectors are dependent");
  ApproxSet s;
  s.kind_ = Kind::Sublattice;
  s.basis_ = basis;
  s.hnf_ = linalg::hermite_normal_form(basis);
  return s;
}

const std::vector<mpz_class>& ApproxSet::residues(std::size_t k) const {
  static const std::vector<mpz_class> none;
  auto it = residues_.find(k);
  return it == residues_.end() ? none : it->second;
}

bool ApproxSet::contains(const std::vector<mpz_class>& x) const {
  switch (kind_) {
    case Kind::Full:
      return true;
    case Kind::Congruence:
      for (const auto& [k, list] : residues_) {
        if (k >= x.size()) continue;
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), x[k].get_mpz_t(), modulus_.get_mpz_t());
        if (!std::binary_search(list.begin(), list.end(), r)) return false;
      }
      return true;
    case Kind::Sublattice:
      return x.size() == hnf_.cols() && linalg::in_row_lattice(hnf_, x);
  }
  return false;
}

std::string ApproxSet::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Full:
      os << "full";
      break;
    case Kind::Congruence:
      os << "congruence mod " << modulus_.get_str();
      for (const auto& [k, list] : residues_) {
        os << "; x_" << k << " in {";
        for (std::size_t i = 0; i < list.size(); ++i) os << (i ? "," : "") << list[i].get_str();
        os << "}";
      }
      break;
    case Kind::Sublattice:
      os << "sublattice of rank " << basis_.rows();
      break;
  }
  return os.str();
}

bool member(const ApproxSet& s, const IntegerPoint& x) {
  if (s.contains(x.coords())) return true;
  if (s.kind() != ApproxSet::Kind::Congruence) return false;  // lattices are symmetric
  std::vector<mpz_class> neg(x.coords());
  for (auto& v : neg) v = -v;
  return s.contains(neg);
}

LValue evaluate_L(const TargetPoint& xi, const IntegerPoint& x, long cap) {
  if (x.size() != xi.size())
    fail(Errc::AmbientMismatch, "point " + x.to_string() + " does not match target dimension");
  if (x.is_zero()) fail(Errc::ZeroPoint, "L is undefined at the zero point");
  LValue out;
  if (sgn(x[0]) == 0) {
    // |xi_0| max_k |x_k|, decided on integers.
    std::size_t best = 1;
    for (std::size_t k = 2; k < x.size(); ++k)
      if (mpz_cmpabs(x[k].get_mpz_t(), x[best].get_mpz_t()) > 0) best = k;
    out.value = xi.abs_xi0() * RigorousReal::integer(abs(x[best]));
    out.argmax = static_cast<int>(best);
    return out;
  }
  const RigorousReal x0 = RigorousReal::integer(x[0]);
  for (std::size_t k = 1; k < x.size(); ++k) {
    RigorousReal branch = abs(xi.coord(0) * RigorousReal::integer(x[k]) - xi.coord(k) * x0);
    if (k == 1) {
      out.value = branch;
      out.argmax = 1;
      continue;
    }
    switch (compare(branch, out.value, cap)) {
      case Ordering::Greater:
        out.value = branch;
        out.argmax = static_cast<int>(k);
        break;
      case Ordering::Less:
        break;
      case Ordering::Indistinguishable:
        out.value = max(out.value, branch);
        out.argmax = -1;
        break;
    }
  }
  return out;
}

RigorousReal L_value(const TargetPoint& xi, const IntegerPoint& x, long cap) {
  return evaluate_L(xi, x, cap).value;
}

namespace {

[[noreturn]] void schema(const std::string& msg) { fail(Errc::SchemaError, msg); }

mpz_class json_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) schema(what + ": not an integer: " + j.dump());
    return z;
  }
  schema(what + ": expected an integer, got " + j.dump());
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) schema("not a rational: '" + s + "'");
  if (sgn(q.get_den()) == 0) schema("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

mpq_class json_rational(const json& j, const std::string& what) {
  if (j.is_number_integer()) return mpq_class(mpz_class(j.get<long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  schema(what + ": expected a rational string, got " + j.dump());
}

RigorousReal real_from_json(const json& j) {
  if (j.is_number_integer()) return RigorousReal::integer(mpz_class(j.get<long>()));
  if (j.is_string()) return RigorousReal::rational(parse_rational(j.get<std::string>()));
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    schema("coordinate must be an object with a string 'type': " + j.dump());
  const std::string type = j["type"].get<std::string>();
  if (type == "rational") {
    if (!j.contains("value")) schema("rational coordinate without 'value'");
    return RigorousReal::rational(json_rational(j["value"], "rational value"));
  }
  if (type == "decimal") {
    if (!j.contains("value") || !j["value"].is_string()) schema("decimal coordinate needs a string 'value'");
    try {
      return RigorousReal::decimal(j["value"].get<std::string>());
    } catch (const Error& e) {
      schema(e.what());
    }
  }
  if (type == "algebraic") {
    if (!j.contains("minpoly") || !j["minpoly"].is_array() || j["minpoly"].empty())
      schema("algebraic coordinate needs a nonempty 'minpoly' array");
    if (!j.contains("interval") || !j["interval"].is_array() || j["interval"].size() != 2)
      schema("algebraic coordinate needs a two-element 'interval'");
    std::vector<mpz_class> coeffs;
    for (const auto& c : j["minpoly"]) coeffs.push_back(json_integer(c, "minpoly coefficient"));
    const mpq_class lo = json_rational(j["interval"][0], "interval endpoint");
    const mpq_class hi = json_rational(j["interval"][1], "interval endpoint");
    return RigorousReal::algebraic(coeffs, lo, hi);
  }
  if (type == "expr") {
    if (!j.contains("op") || !j["op"].is_string()) schema("expr needs a string 'op'");
    if (!j.contains("args") || !j["args"].is_array() || j["args"].empty())
      schema("expr needs a nonempty 'args' array");
    const std::string op = j["op"].get<std::string>();
    std::vector<RigorousReal> args;
    for (const auto& a : j["args"]) args.push_back(real_from_json(a));
    if (op == "-" && args.size() == 1) return -args[0];
    if (args.size() != 2) schema("expr '" + op + "' takes two arguments");
    if (op == "+") return args[0] + args[1];
    if (op == "-") return args[0] - args[1];
    if (op == "*") return args[0] * args[1];
    if (op == "/") return args[0] / args[1];
    schema("unknown expr op '" + op + "'");
  }
  schema("unknown coordinate type '" + type + "'");
}

ApproxSet set_from_json(const json& j, std::size_t dim) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    schema("'S' must be an object with a string 'type'");
  const std::string type = j["type"].get<std::string>();
  try {
    if (type == "full") return ApproxSet::full();
    if (type == "congruence") {
      if (!j.contains("modulus")) schema("congruence set without 'modulus'");
      const mpz_class m = json_integer(j["modulus"], "modulus");
      if (!j.contains("residues") || !j["residues"].is_object())
        schema("congruence set needs a 'residues' object");
      std::map<std::size_t, std::vector<mpz_class>> res;
      for (const auto& [key, list] : j["residues"].items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoul(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          schema("residue key '" + key + "' is not a coordinate index");
        }
        if (k >= dim) schema("residue key " + key + " out of range");
        if (!list.is_array()) schema("residues for coordinate " + key + " must be an array");
        std::vector<mpz_class> r;
        for (const auto& v : list) r.push_back(json_integer(v, "residue"));
        res[k] = std::move(r);
      }
      return ApproxSet::congruence(m, res);
    }
    if (type == "sublattice") {
      if (!j.contains("basis") || !j["basis"].is_array()) schema("sublattice needs a 'basis' array");
      linalg::IntMatrix b(0, dim);
      for (const auto& row : j["basis"]) {
        if (!row.is_array() || row.size() != dim) schema("sublattice basis rows must have length n+1");
        linalg::IntVector v;
        for (const auto& c : row) v.push_back(json_integer(c, "basis entry"));
        b.append_row(v);
      }
      return ApproxSet::sublattice(b);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::DomainError) schema(e.what());
    throw;
  }
  schema("unknown set type '" + type + "'");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

RigorousReal parse_real(std::string_view json_text) { return real_from_json(parse_json(json_text)); }

LoadedTarget load_target(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) schema("configuration must be a JSON object");
  if (!doc.contains("coords") || !doc["coords"].is_array()) schema("missing 'coords' array");
  std::vector<RigorousReal> coords;
  for (const auto& c : doc["coords"]) coords.push_back(real_from_json(c));
  if (coords.size() < 2) schema("'coords' needs at least two entries");
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer()) schema("'n' must be an integer");
    if (doc["n"].get<long long>() != static_cast<long long>(coords.size()) - 1)
      schema("'n' does not match the number of coordinates minus one");
  }
  LoadedTarget out;
  try {
    out.target = TargetPoint(std::move(coords));
  } catch (const Error& e) {
    if (e.code() == Errc::DomainError) schema(e.what());
    throw;
  }
  out.set = doc.contains("S") ? set_from_json(doc["S"], out.target.size()) : ApproxSet::full();
  return out;
}

}  // namespace sdalab::model
