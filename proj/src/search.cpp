#include "ppfq/search.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace ppfq {

namespace {

std::vector<std::uint64_t> key_of(const UniPoly& f) {
  std::vector<std::uint64_t> k;
  k.reserve(f.coeffs().size());
  for (auto c : f.coeffs()) k.push_back(c.v);
  return k;
}

// Every value distinct over F_q; stamp marks values seen for the current candidate.
bool permutes(const Field& F, const std::vector<Elem>& c, std::vector<std::uint32_t>& stamp, std::uint32_t id) {
  for (std::uint64_t a = 0; a < F.q(); ++a) {
    Elem acc = F.zero();
    for (std::size_t k = c.size(); k-- > 0;) acc = F.add(F.mul(acc, Elem{a}), c[k]);
    if (stamp[acc.v] == id) return false;
    stamp[acc.v] = id;
  }
  return true;
}

void scan_slices(const NormalizedCandidates& cand, std::uint64_t first, std::uint64_t last, std::uint64_t slice_size,
                 std::vector<std::vector<std::uint64_t>>& found) {
  const Field& F = cand.field();
  std::vector<std::uint32_t> stamp(F.q(), 0);
  std::uint32_t id = 0;
  std::vector<Elem> coeffs(cand.n() + 1);
  for (std::uint64_t s = first; s < last; ++s) {
    for (std::uint64_t i = s * slice_size; i < (s + 1) * slice_size; ++i) {
      cand.fill(i, coeffs);
      if (++id == 0) {
        std::fill(stamp.begin(), stamp.end(), 0);
        id = 1;
      }
      if (permutes(F, coeffs, stamp, id)) found[s].push_back(i);
    }
  }
}

}  // namespace

NormalizedCandidates::NormalizedCandidates(std::size_t n, Field field) : n_(n), f_(std::move(field)) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "search degree must be at least 2");
  if (f_.q() > kSearchFieldLimit)
    fail(ErrorKind::SearchSpaceTooLarge, f_.describe() + " exceeds the search field limit 2^14");
  const bool p_divides_n = n % f_.p() == 0;
  for (std::size_t k = p_divides_n ? n - 1 : n - 2; k >= 1; --k) free_.push_back(k);
  for (std::size_t i = 0; i < free_.size(); ++i) {
    if (size_ > kCandidateLimit / f_.q())
      fail(ErrorKind::SearchSpaceTooLarge, "more than 2^48 candidates for n = " + std::to_string(n) + " over " + f_.describe());
    size_ *= f_.q();
  }
}

void NormalizedCandidates::fill(std::uint64_t index, std::vector<Elem>& coeffs) const {
  coeffs.assign(n_ + 1, Elem{0});
  coeffs[n_] = f_.one();
  for (std::size_t i = free_.size(); i-- > 0;) {
    coeffs[free_[i]] = Elem{index % f_.q()};
    index /= f_.q();
  }
}

UniPoly NormalizedCandidates::at(std::uint64_t index) const {
  if (index >= size_) fail(ErrorKind::InvalidArgument, "candidate index out of range");
  std::vector<Elem> c;
  fill(index, c);
  return UniPoly(f_, std::move(c));
}

NormalizedCandidates normalized_candidates(std::size_t n, const Field& field) { return {n, field}; }

bool is_normalized(const UniPoly& f) {
  if (!f.degree() || *f.degree() < 2 || !f.is_monic() || f.coeff(0) != Elem{0}) return false;
  const std::size_t n = *f.degree();
  return n % f.field().p() == 0 || f.coeff(n - 1) == Elem{0};
}

std::vector<UniPoly> normalized_orbit(const UniPoly& f) {
  if (!f.degree() || *f.degree() < 2) fail(ErrorKind::InvalidArgument, "orbit canonicalization needs degree at least 2");
  const Field& F = f.field();
  std::vector<UniPoly> out;
  for (std::uint64_t b = 1; b < F.q(); ++b)
    for (std::uint64_t c = 0; c < F.q(); ++c) {
      UniPoly g = compose(f, UniPoly(F, {Elem{c}, Elem{b}}));
      g = g.monic();
      g = g - UniPoly::constant(F, g.coeff(0));
      if (is_normalized(g)) out.push_back(std::move(g));
    }
  std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) { return encoding_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UniPoly canonical_orbit_rep(const UniPoly& f) { return normalized_orbit(f).front(); }

SearchReport classify(std::size_t n, const Field& field, unsigned shards) {
  NormalizedCandidates cand(n, field);
  if (cand.size() > kSearchSpaceLimit)
    fail(ErrorKind::SearchSpaceTooLarge, std::to_string(cand.size()) + " candidates exceed the scan limit 2^32");
  SearchReport out;
  out.n = n;
  out.q = field.q();
  out.default_modulus = field.has_default_modulus();
  out.candidates_scanned = cand.size();

  // Slices follow the leading free coefficient.
  const std::uint64_t slices = cand.free_positions().empty() ? 1 : field.q();
  const std::uint64_t slice_size = cand.size() / slices;
  std::vector<std::vector<std::uint64_t>> found(slices);
  const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(shards, 1, slices));
  if (workers == 1) {
    scan_slices(cand, 0, slices, slice_size, found);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(scan_slices, std::cref(cand), slices * w / workers, slices * (w + 1) / workers, slice_size,
                        std::ref(found));
    for (auto& t : pool) t.join();
  }

  std::map<std::vector<std::uint64_t>, std::size_t> member_of;
  std::vector<OrbitResult> orbits;
  for (const auto& slice : found)
    for (auto index : slice) {
      UniPoly f = cand.at(index);
      out.pps_found.push_back(f);
      auto it = member_of.find(key_of(f));
      if (it != member_of.end()) {
        ++orbits[it->second].members_found;
        continue;
      }
      auto members = normalized_orbit(f);
      for (const auto& g : members) member_of[key_of(g)] = orbits.size();
      orbits.push_back({members.front(), 1, true, {}});
    }
  std::sort(orbits.begin(), orbits.end(),
            [](const OrbitResult& a, const OrbitResult& b) { return encoding_less(a.rep, b.rep); });
  for (auto& o : orbits) {
    o.verdict = is_exceptional(o.rep, Method::Fact);
    if (o.verdict.status == Status::NonExceptional) out.non_exceptional_exists = true;
  }
  out.orbits = std::move(orbits);
  return out;
}

}  // namespace ppfq
