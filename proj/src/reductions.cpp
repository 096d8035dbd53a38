#include "qsep/reductions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <tuple>

namespace qsep {

namespace {

using PartyBits = std::array<int, 4>;

std::size_t compose(const PartyBits& bits, int n_qubits) {
  std::size_t index = 0;
  for (int q = 0; q < n_qubits; ++q) index = (index << 1U) | static_cast<std::size_t>(bits[q]);
  return index;
}

int kind_rank(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::PairTrace: return 0;
    case ReductionKind::OneVsTwo: return 1;
    case ReductionKind::OneVsThree: return 2;
    case ReductionKind::TwoVsTwo: return 3;
  }
  return 4;
}

std::string sorted_names(std::vector<Party> parties) {
  std::sort(parties.begin(), parties.end());
  std::string out;
  for (Party p : parties) out += party_name(p);
  return out;
}

std::string valid_label_list(int n_qubits) {
  std::string out;
  for (const auto& l : all_labels(n_qubits)) {
    if (!out.empty()) out += ' ';
    out += l.to_string();
  }
  return out;
}

void require_arity(const DensityMatrix& rho, int expected, const char* op) {
  if (rho.n_qubits() != expected) {
    std::ostringstream msg;
    msg << op << ": expected a " << expected << "-qubit state, got " << rho.n_qubits() << " qubits";
    throw Error(ErrorKind::WrongArity, msg.str());
  }
}

// Throws BadLabel unless `label` is one of the canonical labels for n qubits
// and, when given, of the expected kind.
void require_label(const ReductionLabel& label, int n_qubits, const char* op) {
  const auto labels = all_labels(n_qubits);
  if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
    std::ostringstream msg;
    msg << op << ": '" << label.to_string() << "' is not a canonical " << n_qubits
        << "-qubit reduction label; valid labels: " << valid_label_list(n_qubits);
    throw Error(ErrorKind::BadLabel, msg.str());
  }
}

void require_kind(const ReductionLabel& label, ReductionKind kind, const char* op) {
  if (label.kind != kind) {
    std::ostringstream msg;
    msg << op << ": label '" << label.to_string() << "' is " << to_string(label.kind) << ", expected "
        << to_string(kind);
    throw Error(ErrorKind::BadLabel, msg.str());
  }
}

}  // namespace

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::PairTrace: return "PAIR_TRACE";
    case ReductionKind::OneVsTwo: return "ONE_VS_TWO";
    case ReductionKind::OneVsThree: return "ONE_VS_THREE";
    case ReductionKind::TwoVsTwo: return "TWO_VS_TWO";
  }
  return "UNKNOWN";
}

// ---------------------------------------------------------------------------
// Labels

std::string ReductionLabel::to_string() const {
  std::string out;
  for (Party p : x) out += party_name(p);
  out += ',';
  for (Party p : y) out += party_name(p);
  return out;
}

std::vector<Party> ReductionLabel::environment(int n_qubits) const {
  std::vector<Party> env;
  for (int q = 0; q < n_qubits; ++q) {
    const auto p = static_cast<Party>(q);
    if (std::find(x.begin(), x.end(), p) == x.end() && std::find(y.begin(), y.end(), p) == y.end()) {
      env.push_back(p);
    }
  }
  return env;
}

bool canonical_less(const ReductionLabel& a, const ReductionLabel& b) {
  const auto key = [](const ReductionLabel& l) {
    return std::make_tuple(kind_rank(l.kind), sorted_names(l.x), sorted_names(l.y));
  };
  return key(a) < key(b);
}

ReductionLabel pair_label(Party p, Party q) {
  if (p == q) throw Error(ErrorKind::BadLabel, "pair label needs two distinct parties");
  return {ReductionKind::PairTrace, {std::min(p, q)}, {std::max(p, q)}};
}

ReductionLabel split_label(Party single, Party a, Party b) {
  std::array<Party, 3> triple{single, a, b};
  std::sort(triple.begin(), triple.end());
  if (triple[0] == triple[1] || triple[1] == triple[2]) {
    throw Error(ErrorKind::BadLabel, "split label needs three distinct parties");
  }
  const auto pos = static_cast<std::size_t>(std::find(triple.begin(), triple.end(), single) - triple.begin());
  return {ReductionKind::OneVsTwo, {single}, {triple[(pos + 1) % 3], triple[(pos + 2) % 3]}};
}

ReductionLabel one_vs_three_label(Party single) {
  const int s = static_cast<int>(single);
  if (s < 0 || s > 3) throw Error(ErrorKind::BadLabel, "one-vs-three label needs a party in A..D");
  std::vector<Party> rest;
  for (int k = 1; k <= 3; ++k) rest.push_back(static_cast<Party>((s + k) % 4));
  return {ReductionKind::OneVsThree, {single}, rest};
}

ReductionLabel two_vs_two_label(Party a, Party b, Party c, Party d) {
  std::vector<Party> g1{a, b};
  std::vector<Party> g2{c, d};
  std::sort(g1.begin(), g1.end());
  std::sort(g2.begin(), g2.end());
  if (g2.front() < g1.front()) std::swap(g1, g2);
  std::array<Party, 4> all{a, b, c, d};
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(ErrorKind::BadLabel, "two-vs-two label needs four distinct parties");
  }
  return {ReductionKind::TwoVsTwo, g1, g2};
}

std::vector<ReductionLabel> all_labels(int n_qubits) {
  if (n_qubits != 3 && n_qubits != 4) {
    throw Error(ErrorKind::WrongArity, "reductions are defined for 3 or 4 qubits only");
  }
  std::vector<ReductionLabel> labels;
  for (int p = 0; p < n_qubits; ++p) {
    for (int q = p + 1; q < n_qubits; ++q) labels.push_back(pair_label(static_cast<Party>(p), static_cast<Party>(q)));
  }
  for (int traced = (n_qubits == 3 ? 3 : 0); traced < 4; ++traced) {
    std::vector<Party> rest;
    for (int q = 0; q < n_qubits; ++q) {
      if (q != traced) rest.push_back(static_cast<Party>(q));
    }
    if (rest.size() != 3) continue;
    labels.push_back(split_label(rest[0], rest[1], rest[2]));
    labels.push_back(split_label(rest[1], rest[2], rest[0]));
    labels.push_back(split_label(rest[2], rest[0], rest[1]));
  }
  if (n_qubits == 4) {
    for (int s = 0; s < 4; ++s) labels.push_back(one_vs_three_label(static_cast<Party>(s)));
    labels.push_back(two_vs_two_label(Party::A, Party::B, Party::C, Party::D));
    labels.push_back(two_vs_two_label(Party::A, Party::C, Party::B, Party::D));
    labels.push_back(two_vs_two_label(Party::A, Party::D, Party::B, Party::C));
  }
  std::sort(labels.begin(), labels.end(), canonical_less);
  return labels;
}

ReductionLabel parse_label(std::string_view text, int n_qubits) {
  const auto fail = [&](const std::string& why) -> ReductionLabel {
    std::ostringstream msg;
    msg << "bad reduction label '" << text << "' (" << why << "); valid labels for " << n_qubits
        << " qubits: " << valid_label_list(n_qubits);
    throw Error(ErrorKind::BadLabel, msg.str());
  };

  std::vector<std::vector<Party>> groups(1);
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')') continue;
    if (ch == ',') {
      groups.emplace_back();
      continue;
    }
    Party p{};
    try {
      p = party_from_char(ch);
    } catch (const Error&) {
      return fail(std::string("unknown party '") + ch + "'");
    }
    if (static_cast<int>(p) >= n_qubits) return fail(std::string("no party ") + party_name(p));
    groups.back().push_back(p);
  }
  if (groups.size() != 2 || groups[0].empty() || groups[1].empty()) return fail("expected two comma-separated groups");

  std::vector<Party> all = groups[0];
  all.insert(all.end(), groups[1].begin(), groups[1].end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return fail("repeated party");

  auto& g0 = groups[0];
  auto& g1 = groups[1];
  if (g0.size() > g1.size()) std::swap(g0, g1);

  ReductionLabel label;
  if (g0.size() == 1 && g1.size() == 1) {
    label = pair_label(g0[0], g1[0]);
  } else if (g0.size() == 1 && g1.size() == 2) {
    label = split_label(g0[0], g1[0], g1[1]);
  } else if (g0.size() == 1 && g1.size() == 3) {
    label = one_vs_three_label(g0[0]);
  } else if (g0.size() == 2 && g1.size() == 2) {
    label = two_vs_two_label(g0[0], g0[1], g1[0], g1[1]);
  } else {
    return fail("unsupported group sizes");
  }
  const auto labels = all_labels(n_qubits);
  if (std::find(labels.begin(), labels.end(), label) == labels.end()) return fail("not defined for this arity");
  return label;
}

// ---------------------------------------------------------------------------
// ReductionSet

void ReductionSet::insert(ReductionLabel label, DensityMatrix state) {
  entries_.push_back(Entry{std::move(label), std::move(state)});
}

const DensityMatrix* ReductionSet::find(const ReductionLabel& label) const {
  for (const auto& e : entries_) {
    if (e.label == label) return &e.state;
  }
  return nullptr;
}

const DensityMatrix& ReductionSet::at(const ReductionLabel& label) const {
  if (const auto* s = find(label)) return *s;
  throw Error(ErrorKind::BadLabel, "reduction '" + label.to_string() + "' not in set");
}

// ---------------------------------------------------------------------------
// Tripartite

DensityMatrix reduce_pair(const DensityMatrix& rho, const ReductionLabel& label) {
  require_arity(rho, 3, "reduce_pair");
  require_kind(label, ReductionKind::PairTrace, "reduce_pair");
  require_label(label, 3, "reduce_pair");
  const std::array<Party, 2> keep{label.x[0], label.y[0]};
  return partial_trace(rho, keep);
}

DensityMatrix reduce_split(const DensityMatrix& rho, const ReductionLabel& label) {
  require_arity(rho, 3, "reduce_split");
  require_kind(label, ReductionKind::OneVsTwo, "reduce_split");
  require_label(label, 3, "reduce_split");

  const auto at = [&rho](int i, int j, int k, int r, int s, int t) { return rho(4 * i + 2 * j + k, 4 * r + 2 * s + t); };
  const Party single = label.x[0];

  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
          Complex v;
          switch (single) {
            case Party::A: v = at(i, j, j, r, s, s) + at(i, j, 1 - j, r, s, 1 - s); break;
            case Party::B: v = at(j, i, j, s, r, s) + at(1 - j, i, j, 1 - s, r, s); break;
            case Party::C: v = at(j, j, i, s, s, r) + at(j, 1 - j, i, s, 1 - s, r); break;
            default: throw Error(ErrorKind::BadLabel, "reduce_split: bad single party");
          }
          out(2 * i + j, 2 * r + s) = v;
        }
      }
    }
  }
  return derive_density(rho, std::move(out), 2);
}

DensityMatrix reduce_split_channel(const DensityMatrix& rho, const ReductionLabel& label) {
  require_arity(rho, 3, "reduce_split_channel");
  require_kind(label, ReductionKind::OneVsTwo, "reduce_split_channel");
  return reduce_channel(rho, label);
}

ReductionSet reduce_all_tripartite(const DensityMatrix& rho) {
  require_arity(rho, 3, "reduce_all_tripartite");
  ReductionSet set;
  for (auto& label : all_labels(3)) {
    DensityMatrix state = reduce(rho, label);
    set.insert(std::move(label), std::move(state));
  }
  return set;
}

// ---------------------------------------------------------------------------
// Quadripartite

DensityMatrix reduce_one_vs_three(const DensityMatrix& rho, const ReductionLabel& label) {
  require_arity(rho, 4, "reduce_one_vs_three");
  require_kind(label, ReductionKind::OneVsThree, "reduce_one_vs_three");
  require_label(label, 4, "reduce_one_vs_three");

  const auto xs = static_cast<std::size_t>(label.x[0]);
  const auto y0 = static_cast<std::size_t>(label.y[0]);
  const auto y1 = static_cast<std::size_t>(label.y[1]);
  const auto y2 = static_cast<std::size_t>(label.y[2]);

  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
          Complex v = 0.0;
          for (int p = 0; p < 2; ++p) {
            for (int q = 0; q < 2; ++q) {
              PartyBits row{}, col{};
              row[xs] = i, row[y0] = j, row[y1] = j ^ p, row[y2] = j ^ q;
              col[xs] = r, col[y0] = s, col[y1] = s ^ p, col[y2] = s ^ q;
              v += rho(compose(row, 4), compose(col, 4));
            }
          }
          out(2 * i + j, 2 * r + s) = v;
        }
      }
    }
  }
  return derive_density(rho, std::move(out), 2);
}

DensityMatrix reduce_two_vs_two(const DensityMatrix& rho, const ReductionLabel& label) {
  require_arity(rho, 4, "reduce_two_vs_two");
  require_kind(label, ReductionKind::TwoVsTwo, "reduce_two_vs_two");
  require_label(label, 4, "reduce_two_vs_two");

  const auto x0 = static_cast<std::size_t>(label.x[0]);
  const auto x1 = static_cast<std::size_t>(label.x[1]);
  const auto y0 = static_cast<std::size_t>(label.y[0]);
  const auto y1 = static_cast<std::size_t>(label.y[1]);

  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
          Complex v = 0.0;
          for (int p = 0; p < 2; ++p) {
            for (int q = 0; q < 2; ++q) {
              PartyBits row{}, col{};
              row[x0] = i, row[x1] = i ^ p, row[y0] = j, row[y1] = j ^ q;
              col[x0] = r, col[x1] = r ^ p, col[y0] = s, col[y1] = s ^ q;
              v += rho(compose(row, 4), compose(col, 4));
            }
          }
          out(2 * i + j, 2 * r + s) = v;
        }
      }
    }
  }
  return derive_density(rho, std::move(out), 2);
}

DensityMatrix reduce_trace_then_split(const DensityMatrix& rho, Party traced, const ReductionLabel& label) {
  require_arity(rho, 4, "reduce_trace_then_split");
  require_kind(label, ReductionKind::OneVsTwo, "reduce_trace_then_split");
  require_label(label, 4, "reduce_trace_then_split");
  const auto env = label.environment(4);
  if (env.size() != 1 || env[0] != traced) {
    throw Error(ErrorKind::BadLabel, std::string("reduce_trace_then_split: label '") + label.to_string() +
                                         "' does not act on the parties left after tracing " + party_name(traced));
  }

  std::vector<Party> remaining;
  for (int q = 0; q < 4; ++q) {
    if (static_cast<Party>(q) != traced) remaining.push_back(static_cast<Party>(q));
  }
  const auto position = [&remaining](Party p) {
    return static_cast<Party>(std::find(remaining.begin(), remaining.end(), p) - remaining.begin());
  };
  const DensityMatrix reduced = partial_trace(rho, remaining);
  const ReductionLabel local = split_label(position(label.x[0]), position(label.y[0]), position(label.y[1]));
  return reduce_split(reduced, local);
}

ReductionSet reduce_all_quadripartite(const DensityMatrix& rho) {
  require_arity(rho, 4, "reduce_all_quadripartite");
  ReductionSet set;
  for (auto& label : all_labels(4)) {
    DensityMatrix state = reduce(rho, label);
    set.insert(std::move(label), std::move(state));
  }
  return set;
}

// ---------------------------------------------------------------------------
// Generic

DensityMatrix reduce(const DensityMatrix& rho, const ReductionLabel& label) {
  const int n = rho.n_qubits();
  if (n != 3 && n != 4) throw Error(ErrorKind::WrongArity, "reductions are defined for 3 or 4 qubits only");
  require_label(label, n, "reduce");
  switch (label.kind) {
    case ReductionKind::PairTrace: {
      const std::array<Party, 2> keep{label.x[0], label.y[0]};
      return partial_trace(rho, keep);
    }
    case ReductionKind::OneVsTwo:
      if (n == 3) return reduce_split(rho, label);
      return reduce_trace_then_split(rho, label.environment(4).front(), label);
    case ReductionKind::OneVsThree: return reduce_one_vs_three(rho, label);
    case ReductionKind::TwoVsTwo: return reduce_two_vs_two(rho, label);
  }
  throw Error(ErrorKind::BadLabel, "unknown reduction kind");
}

ReductionSet reduce_all(const DensityMatrix& rho) {
  if (rho.n_qubits() == 3) return reduce_all_tripartite(rho);
  if (rho.n_qubits() == 4) return reduce_all_quadripartite(rho);
  throw Error(ErrorKind::WrongArity, "reductions are defined for 3 or 4 qubits only");
}

std::vector<ComplexMatrix> kraus_operators(const ReductionLabel& label, int n_qubits) {
  require_label(label, n_qubits, "kraus_operators");
  std::vector<Party> linked_x(label.x.begin() + 1, label.x.end());
  std::vector<Party> linked_y(label.y.begin() + 1, label.y.end());
  const std::vector<Party> env = label.environment(n_qubits);
  const std::size_t extra_bits = linked_x.size() + linked_y.size() + env.size();
  const std::size_t in_dim = std::size_t{1} << n_qubits;

  std::vector<ComplexMatrix> kraus(std::size_t{1} << extra_bits, ComplexMatrix(4, in_dim));
  for (std::size_t b = 0; b < in_dim; ++b) {
    const auto bit = [&](Party p) { return static_cast<int>((b >> (n_qubits - 1 - static_cast<int>(p))) & 1U); };
    const int sx = bit(label.x[0]);
    const int sy = bit(label.y[0]);
    std::size_t k = 0;
    for (Party p : linked_x) k = (k << 1U) | static_cast<std::size_t>(bit(p) ^ sx);
    for (Party p : linked_y) k = (k << 1U) | static_cast<std::size_t>(bit(p) ^ sy);
    for (Party p : env) k = (k << 1U) | static_cast<std::size_t>(bit(p));
    kraus[k](static_cast<std::size_t>(2 * sx + sy), b) = 1.0;
  }
  return kraus;
}

ComplexMatrix apply_channel(const ComplexMatrix& rho, const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw Error(ErrorKind::BadDimension, "apply_channel: no Kraus operators");
  ComplexMatrix out(kraus.front().rows());
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

DensityMatrix reduce_channel(const DensityMatrix& rho, const ReductionLabel& label) {
  const int n = rho.n_qubits();
  if (n != 3 && n != 4) throw Error(ErrorKind::WrongArity, "reductions are defined for 3 or 4 qubits only");
  return derive_density(rho, apply_channel(rho.matrix(), kraus_operators(label, n)), 2);
}

}  // namespace qsep
