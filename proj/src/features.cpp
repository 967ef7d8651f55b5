#include "innercore/features.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "innercore/errors.hpp"

namespace innercore {

Property parse_property(std::string_view name) {
  if (name == "N") return Property::Neighbors;
  if (name == "N_out") return Property::NeighborsOut;
  if (name == "N_in") return Property::NeighborsIn;
  if (name == "deg") return Property::Degree;
  if (name == "deg_out") return Property::DegreeOut;
  if (name == "deg_in") return Property::DegreeIn;
  if (name == "S") return Property::Strength;
  if (name == "S_out") return Property::StrengthOut;
  if (name == "S_in") return Property::StrengthIn;
  throw InputError("unknown node property selector: " + std::string(name));
}

std::string_view property_name(Property p) {
  switch (p) {
    case Property::Neighbors: return "N";
    case Property::NeighborsOut: return "N_out";
    case Property::NeighborsIn: return "N_in";
    case Property::Degree: return "deg";
    case Property::DegreeOut: return "deg_out";
    case Property::DegreeIn: return "deg_in";
    case Property::Strength: return "S";
    case Property::StrengthOut: return "S_out";
    case Property::StrengthIn: return "S_in";
  }
  throw InvariantViolation("property_name: bad enum value");
}

std::vector<Property> default_properties() {
  return {Property::DegreeIn, Property::DegreeOut, Property::StrengthIn, Property::StrengthOut};
}

FeatureMatrix compute_features(const SnapshotGraph& g, std::span<const Property> props) {
  static const std::vector<std::uint8_t> kAll;
  return compute_features(g, props, kAll);
}

FeatureMatrix compute_features(const SnapshotGraph& g, std::span<const Property> props,
                               const std::vector<std::uint8_t>& alive) {
  if (props.empty()) throw InputError("compute_features: empty property list");
  const std::size_t n = g.node_count();
  const bool filtered = !alive.empty();
  if (filtered && alive.size() != n)
    throw InvariantViolation("compute_features: alive mask size mismatch");

  FeatureMatrix fm;
  std::vector<std::uint32_t> row_of(n, UINT32_MAX);
  for (std::uint32_t p = 0; p < n; ++p) {
    if (!filtered || alive[p]) {
      row_of[p] = static_cast<std::uint32_t>(fm.node_ids.size());
      fm.node_ids.push_back(g.nodes()[p]);
    }
  }
  const std::size_t rows = fm.node_ids.size();
  fm.values.setZero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(props.size()));
  if (rows == 0) return fm;

  bool want[9] = {false};
  for (Property p : props) want[static_cast<std::size_t>(p)] = true;
  auto wants = [&](Property p) { return want[static_cast<std::size_t>(p)]; };
  const bool scalar_pass =
      wants(Property::Degree) || wants(Property::DegreeOut) || wants(Property::DegreeIn) ||
      wants(Property::Strength) || wants(Property::StrengthOut) || wants(Property::StrengthIn);
  const bool neighbor_pass =
      wants(Property::Neighbors) || wants(Property::NeighborsOut) || wants(Property::NeighborsIn);

  std::vector<double> deg, deg_out, deg_in, str, str_out, str_in;
  if (scalar_pass) {
    deg.assign(rows, 0.0);
    deg_out.assign(rows, 0.0);
    deg_in.assign(rows, 0.0);
    str.assign(rows, 0.0);
    str_out.assign(rows, 0.0);
    str_in.assign(rows, 0.0);
    for (const Edge& e : g.edges()) {
      const std::uint32_t a = *g.position_of(e.src);
      const std::uint32_t b = *g.position_of(e.dst);
      const std::uint32_t ra = row_of[a], rb = row_of[b];
      if (ra == UINT32_MAX || rb == UINT32_MAX) continue;  // edge vanished with its endpoint
      deg_out[ra] += 1.0;
      str_out[ra] += e.weight;
      deg_in[rb] += 1.0;
      str_in[rb] += e.weight;
      // undirected totals count each incident edge once, a self-loop included
      deg[ra] += 1.0;
      str[ra] += e.weight;
      if (ra != rb) {
        deg[rb] += 1.0;
        str[rb] += e.weight;
      }
    }
  }

  std::vector<double> nbr, nbr_out, nbr_in;
  if (neighbor_pass) {
    nbr.assign(rows, 0.0);
    nbr_out.assign(rows, 0.0);
    nbr_in.assign(rows, 0.0);
    std::vector<std::uint32_t> scratch;
    auto distinct = [&](std::vector<std::uint32_t>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return static_cast<double>(v.size());
    };
    for (std::uint32_t p = 0; p < n; ++p) {
      const std::uint32_t r = row_of[p];
      if (r == UINT32_MAX) continue;
      std::vector<std::uint32_t> outs, ins;
      for (std::uint32_t idx : g.out_edge_ids(p)) {
        const std::uint32_t q = *g.position_of(g.edges()[idx].dst);
        if (q != p && row_of[q] != UINT32_MAX) outs.push_back(q);
      }
      for (std::uint32_t idx : g.in_edge_ids(p)) {
        const std::uint32_t q = *g.position_of(g.edges()[idx].src);
        if (q != p && row_of[q] != UINT32_MAX) ins.push_back(q);
      }
      scratch = outs;
      scratch.insert(scratch.end(), ins.begin(), ins.end());
      nbr[r] = distinct(scratch);
      nbr_out[r] = distinct(outs);
      nbr_in[r] = distinct(ins);
    }
  }

  for (std::size_t c = 0; c < props.size(); ++c) {
    const std::vector<double>* col = nullptr;
    switch (props[c]) {
      case Property::Neighbors: col = &nbr; break;
      case Property::NeighborsOut: col = &nbr_out; break;
      case Property::NeighborsIn: col = &nbr_in; break;
      case Property::Degree: col = &deg; break;
      case Property::DegreeOut: col = &deg_out; break;
      case Property::DegreeIn: col = &deg_in; break;
      case Property::Strength: col = &str; break;
      case Property::StrengthOut: col = &str_out; break;
      case Property::StrengthIn: col = &str_in; break;
    }
    for (std::size_t r = 0; r < rows; ++r)
      fm.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*col)[r];
  }
  return fm;
}

}  // namespace innercore
