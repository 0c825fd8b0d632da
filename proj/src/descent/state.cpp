#include <sstream>

#include "zc/descent.hpp"

namespace zc::descent {

void DelPezzo::validate() const {
  if (dS < 1 || dS > 3) throw InvalidInput("dS must be 1, 2 or 3, got " + std::to_string(dS));
  if (with_x4 && dS != 3) throw InvalidInput("x4 is only available on cubic surfaces (dS = 3)");
}

std::vector<std::string> DelPezzo::basis() const {
  if (with_x4) return {"h", "x4"};
  return {"h"};
}

long DelPezzo::degree_of(const std::string& symbol) const {
  if (symbol == "h") return dS;
  if (symbol == "x4" && with_x4) return 4;
  throw InvalidInput("unknown basis cycle '" + symbol + "' on this surface");
}

long DelPezzo::degree_of(const Combo& c) const {
  long d = 0;
  for (const auto& [b, k] : c) d += k * degree_of(b);
  return d;
}

Json DelPezzo::to_json() const { return {{"dS", dS}, {"basis", basis()}}; }

DelPezzo DelPezzo::from_json(const Json& j) {
  DelPezzo S;
  if (!j.is_object() || !j.contains("dS")) throw InvalidInput("surface needs \"dS\"");
  S.dS = j.at("dS").get<int>();
  if (j.contains("basis"))
    for (const auto& b : j.at("basis")) {
      auto name = b.get<std::string>();
      if (name == "x4")
        S.with_x4 = true;
      else if (name != "h")
        throw InvalidInput("unknown basis cycle '" + name + "'");
    }
  S.validate();
  return S;
}

long CycleState::total(const DelPezzo& S) const {
  if (abstract) return abstract_degree;
  return sign * unknown_degree + S.degree_of(coeffs);
}

long CycleState::coeff(const std::string& b) const {
  auto it = coeffs.find(b);
  return it == coeffs.end() ? 0 : it->second;
}

namespace {

Combo nonzero(const Combo& c) {
  Combo r;
  for (const auto& [b, k] : c)
    if (k != 0) r[b] = k;
  return r;
}

Json combo_json(const Combo& c) {
  Json j = Json::object();
  for (const auto& [b, k] : c)
    if (k != 0) j[b] = k;
  return j;
}

Combo combo_from(const Json& j) {
  if (!j.is_object()) throw InvalidInput("basis combination must be a JSON object");
  Combo c;
  for (const auto& [k, v] : j.items()) c[k] = v.get<long>();
  return c;
}

long get_long(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InvalidInput(std::string("missing integer field \"") + key + "\"");
  return j.at(key).get<long>();
}

}  // namespace

bool operator==(const CycleState& a, const CycleState& b) {
  if (a.abstract != b.abstract) return false;
  if (a.abstract) return a.abstract_degree == b.abstract_degree;
  return a.sign == b.sign && a.unknown_degree == b.unknown_degree && nonzero(a.coeffs) == nonzero(b.coeffs);
}

Json CycleState::to_json(const DelPezzo& S) const {
  Json j;
  if (abstract) {
    j["abstract"] = true;
    j["total"] = abstract_degree;
    return j;
  }
  j["sign"] = sign;
  j["unknown_degree"] = unknown_degree;
  j["coeffs"] = combo_json(coeffs);
  j["total"] = total(S);
  return j;
}

CycleState CycleState::from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("cycle state must be a JSON object");
  if (j.value("abstract", false)) return abstract_class(get_long(j, "total"));
  CycleState st;
  st.sign = static_cast<int>(get_long(j, "sign"));
  if (st.sign != 1 && st.sign != -1) throw InvalidInput("sign must be 1 or -1");
  st.unknown_degree = get_long(j, "unknown_degree");
  if (j.contains("coeffs")) st.coeffs = nonzero(combo_from(j.at("coeffs")));
  return st;
}

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Complement: return "Complement";
    case MoveKind::VariantComplement: return "VariantComplement";
    case MoveKind::VBSubtract: return "VBSubtract";
    case MoveKind::InvolutionFlip: return "InvolutionFlip";
    case MoveKind::CurveRR: return "CurveRR";
    case MoveKind::AddBasis: return "AddBasis";
    case MoveKind::EntryRR: return "EntryRR";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (auto k : {MoveKind::Complement, MoveKind::VariantComplement, MoveKind::VBSubtract, MoveKind::InvolutionFlip,
                 MoveKind::CurveRR, MoveKind::AddBasis, MoveKind::EntryRR})
    if (to_string(k) == s) return k;
  throw InvalidInput("unknown move kind '" + s + "'");
}

Json Move::to_json() const {
  Json j;
  j["kind"] = descent::to_string(kind);
  switch (kind) {
    case MoveKind::Complement:
    case MoveKind::VariantComplement: j["l"] = l; break;
    case MoveKind::VBSubtract:
      j["l"] = l;
      j["s"] = s;
      j["target"] = combo_json(combo);
      break;
    case MoveKind::CurveRR:
      j["l"] = l;
      j["combo"] = combo_json(combo);
      break;
    case MoveKind::AddBasis: j["combo"] = combo_json(combo); break;
    case MoveKind::EntryRR: j["degree"] = degree; break;
    case MoveKind::InvolutionFlip: break;
  }
  Json w = Json::object();
  for (const auto& [k, v] : witness) w[k] = v;
  j["witness"] = w;
  return j;
}

Move Move::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InvalidInput("move needs a \"kind\"");
  Move m;
  m.kind = move_kind_from_string(j.at("kind").get<std::string>());
  switch (m.kind) {
    case MoveKind::Complement:
    case MoveKind::VariantComplement: m.l = get_long(j, "l"); break;
    case MoveKind::VBSubtract:
      m.l = get_long(j, "l");
      m.s = get_long(j, "s");
      m.combo = combo_from(j.at("target"));
      break;
    case MoveKind::CurveRR:
      m.l = get_long(j, "l");
      m.combo = combo_from(j.at("combo"));
      break;
    case MoveKind::AddBasis: m.combo = combo_from(j.at("combo")); break;
    case MoveKind::EntryRR: m.degree = get_long(j, "degree"); break;
    case MoveKind::InvolutionFlip: break;
  }
  if (j.contains("witness"))
    for (const auto& [k, v] : j.at("witness").items()) m.witness[k] = v.get<long>();
  return m;
}

std::string Move::str() const {
  std::ostringstream os;
  os << descent::to_string(kind);
  auto combo_str = [](const Combo& c) {
    std::string out;
    for (const auto& [b, k] : c) {
      if (k == 0) continue;
      if (!out.empty()) out += k < 0 ? " - " : " + ";
      else if (k < 0) out += "-";
      long a = k < 0 ? -k : k;
      out += (a == 1 ? "" : std::to_string(a)) + b;
    }
    return out.empty() ? std::string("0") : out;
  };
  switch (kind) {
    case MoveKind::Complement:
    case MoveKind::VariantComplement: os << "(" << l << ")"; break;
    case MoveKind::VBSubtract: os << "(" << l << ", " << s << ", " << combo_str(combo) << ")"; break;
    case MoveKind::CurveRR: os << "(" << l << ", " << combo_str(combo) << ")"; break;
    case MoveKind::AddBasis: os << "(" << combo_str(combo) << ")"; break;
    case MoveKind::EntryRR: os << "(" << degree << ")"; break;
    case MoveKind::InvolutionFlip: break;
  }
  return os.str();
}

Json Certificate::to_json() const {
  Json j;
  j["surface"] = surface.to_json();
  j["initial"] = initial.to_json(surface);
  Json ms = Json::array();
  for (const auto& m : moves) ms.push_back(m.to_json());
  j["moves"] = ms;
  j["final"] = final_state.to_json(surface);
  return j;
}

Certificate Certificate::from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("certificate must be a JSON object");
  for (const char* key : {"surface", "initial", "moves", "final"})
    if (!j.contains(key)) throw InvalidInput(std::string("certificate needs \"") + key + "\"");
  Certificate c;
  c.surface = DelPezzo::from_json(j.at("surface"));
  c.initial = CycleState::from_json(j.at("initial"));
  for (const auto& m : j.at("moves")) c.moves.push_back(Move::from_json(m));
  c.final_state = CycleState::from_json(j.at("final"));
  return c;
}

Json VerifyReport::to_json() const {
  Json j;
  j["ok"] = ok;
  if (!ok) {
    j["step"] = step;
    j["reason"] = reason;
  }
  return j;
}

}  // namespace zc::descent
