#include "topocount/topology.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace topocount {

namespace {

std::string mask_str(PointSet s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  s.for_each_point([&](int p) {
    if (!first) os << ",";
    os << p;
    first = false;
  });
  os << "}";
  return os.str();
}

bool sorted_contains(std::span<const PointSet> sorted, PointSet s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

}  // namespace

bool Topology::contains_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

std::vector<PointSet> normalize_family(std::span<const PointSet> family) {
  std::vector<PointSet> out(family.begin(), family.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool find_family_violation(std::span<const PointSet> sorted_family,
                           PointSet ground, FamilyViolation* out) {
  auto report = [&](Errc kind, PointSet a, PointSet b) {
    if (out != nullptr) *out = FamilyViolation{kind, a, b};
    return true;
  };

  for (PointSet s : sorted_family) {
    if (!s.subset_of(ground)) return report(Errc::not_subset, s, PointSet());
  }
  if (!sorted_contains(sorted_family, PointSet::empty_set())) {
    return report(Errc::w1_missing, PointSet::empty_set(), PointSet());
  }
  if (!sorted_contains(sorted_family, ground)) {
    return report(Errc::w1_missing, ground, PointSet());
  }

  // First missing union wins over first missing intersection.
  bool have_w3 = false;
  PointSet w3a, w3b;
  const std::size_t k = sorted_family.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const PointSet a = sorted_family[i];
      const PointSet b = sorted_family[j];
      if (!sorted_contains(sorted_family, a | b)) {
        return report(Errc::w2_violation, a, b);
      }
      if (!have_w3 && !sorted_contains(sorted_family, a & b)) {
        have_w3 = true;
        w3a = a;
        w3b = b;
      }
    }
  }
  if (have_w3) return report(Errc::w3_violation, w3a, w3b);
  return false;
}

Topology validate(std::span<const PointSet> family, PointSet ground) {
  std::vector<PointSet> opens = normalize_family(family);
  FamilyViolation v;
  if (find_family_violation(opens, ground, &v)) {
    std::ostringstream msg;
    switch (v.kind) {
      case Errc::not_subset:
        msg << "family element " << mask_str(v.witness_a)
            << " is not a subset of the ground set " << mask_str(ground);
        break;
      case Errc::w1_missing:
        msg << "w1 violated: " << (v.witness_a.empty() ? "the empty set" : "the ground set")
            << " is not a member";
        break;
      case Errc::w2_violation:
        msg << "w2 violated: union of " << mask_str(v.witness_a) << " and "
            << mask_str(v.witness_b) << " is not a member";
        break;
      default:
        msg << "w3 violated: intersection of " << mask_str(v.witness_a)
            << " and " << mask_str(v.witness_b) << " is not a member";
        break;
    }
    throw Error(v.kind, msg.str())
        .with_witness(v.witness_a.mask(), v.witness_b.mask());
  }
  return Topology::unchecked(ground, std::move(opens));
}

namespace {

/// Applies an elementwise set transform to the opens, then restores the
/// representation invariants (sort + dedup).
template <class F>
std::vector<PointSet> transformed_opens(const Topology& t, F&& f) {
  std::vector<PointSet> out;
  out.reserve(t.opens().size());
  for (PointSet o : t.opens()) out.push_back(f(o));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_open(const Topology& t, PointSet x, const char* op) {
  if (!t.contains_open(x)) {
    throw Error(Errc::not_open, std::string(op) + ": " + mask_str(x) +
                                    " is not an open of the topology")
        .with_witness(x.mask());
  }
}

void require_disjoint(PointSet ground, PointSet y, const char* op) {
  if (!ground.disjoint_with(y)) {
    throw Error(Errc::not_disjoint, std::string(op) + ": " + mask_str(y) +
                                        " overlaps the ground set " +
                                        mask_str(ground))
        .with_witness(y.mask(), ground.mask());
  }
}

}  // namespace

Topology intersection_topology(const Topology& t, PointSet x) {
  require_open(t, x, "intersection_topology");
  return Topology::unchecked(x, transformed_opens(t, [&](PointSet o) { return o & x; }));
}

Topology shift_topology(const Topology& t, PointSet x) {
  require_open(t, x, "shift_topology");
  return Topology::unchecked(t.ground().minus(x),
                             transformed_opens(t, [&](PointSet o) { return o.minus(x); }));
}

ClosedFamily inverse_shift(const Topology& t, PointSet y) {
  require_disjoint(t.ground(), y, "inverse_shift");
  ClosedFamily fam;
  fam.floor = y;
  fam.ceiling = t.ground() | y;
  fam.members = transformed_opens(t, [&](PointSet o) { return o | y; });
  return fam;
}

Topology co_topology(const Topology& t) {
  const PointSet e = t.ground();
  return Topology::unchecked(e, transformed_opens(t, [&](PointSet o) { return e.minus(o); }));
}

bool is_t0(const Topology& t) {
  const std::vector<int> pts = t.ground().to_points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool separated = false;
      for (PointSet o : t.opens()) {
        if (o.contains(pts[i]) != o.contains(pts[j])) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

Topology direct_sum(const Topology& t1, const Topology& t2) {
  require_disjoint(t1.ground(), t2.ground(), "direct_sum");
  std::vector<PointSet> out;
  out.reserve(t1.opens().size() * t2.opens().size());
  for (PointSet a : t1.opens()) {
    for (PointSet b : t2.opens()) out.push_back(a | b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Topology::unchecked(t1.ground() | t2.ground(), std::move(out));
}

Topology w_sum(const Topology& t1, const Topology& t2) {
  require_disjoint(t1.ground(), t2.ground(), "w_sum");
  const PointSet e1 = t1.ground();
  std::vector<PointSet> out = t1.opens();
  out.reserve(out.size() + t2.opens().size());
  for (PointSet o : t2.opens()) out.push_back(o | e1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Topology::unchecked(t1.ground() | t2.ground(), std::move(out));
}

std::pair<Topology, Topology> recover_components(const Topology& t, PointSet e1) {
  require_open(t, e1, "recover_components");
  return {intersection_topology(t, e1), shift_topology(t, e1)};
}

Relabeling Relabeling::shift(int offset) {
  Relabeling r;
  for (int i = 0; i < kMaxPoints; ++i) {
    r.to_[i] = static_cast<std::uint8_t>(i + offset);
  }
  return r;
}

Relabeling Relabeling::from_permutation(std::span<const int> image) {
  Relabeling r;
  for (std::size_t i = 0; i < image.size() && i < kMaxPoints; ++i) {
    r.to_[i] = static_cast<std::uint8_t>(image[i]);
  }
  return r;
}

Relabeling Relabeling::swap_points(int a, int b) {
  Relabeling r;
  r.to_[a] = static_cast<std::uint8_t>(b);
  r.to_[b] = static_cast<std::uint8_t>(a);
  return r;
}

Topology relabel(const Topology& t, const Relabeling& bijection) {
  std::array<int, kMaxPoints> to{};
  PointSet image;
  bool bad_width = false;
  int bad_point = 0;
  bool collision = false;
  t.ground().for_each_point([&](int p) {
    const int q = bijection.image_of(p);
    if (q >= kMaxPoints) {
      if (!bad_width) bad_point = p;
      bad_width = true;
      return;
    }
    if (image.contains(q)) collision = true;
    image = image | PointSet::single(q);
    to[p] = q;
  });
  if (bad_width) {
    throw Error(Errc::width_exceeded,
                "relabel: image of point " + std::to_string(bad_point) +
                    " falls outside the " + std::to_string(kMaxPoints) +
                    "-point universe");
  }
  if (collision || image.size() != t.ground().size()) {
    throw Error(Errc::not_injective, "relabel: map is not injective on the ground set");
  }

  auto remap = [&](PointSet s) {
    PointSet out;
    s.for_each_point([&](int p) { out = out | PointSet::single(to[p]); });
    return out;
  };
  std::vector<PointSet> opens;
  opens.reserve(t.opens().size());
  for (PointSet o : t.opens()) opens.push_back(remap(o));
  std::sort(opens.begin(), opens.end());
  assert(std::adjacent_find(opens.begin(), opens.end()) == opens.end());
  return Topology::unchecked(image, std::move(opens));
}

Topology normalize(const Topology& t) {
  Relabeling r;
  int next = 0;
  t.ground().for_each_point([&](int p) { r.map(p, next++); });
  return relabel(t, r);
}

}  // namespace topocount
