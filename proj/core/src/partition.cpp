#include "ordmatch/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ordmatch {

OrderedPartition::OrderedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("OrderedPartition: no parts");
  total_ = 0;
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("OrderedPartition: part < 1");
    total_ += p;
  }
}

OrderedPartition OrderedPartition::parse(const std::string& csv) {
  std::vector<int> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("OrderedPartition: bad part '" + item + "'");
    }
    if (pos != item.size())
      throw std::invalid_argument("OrderedPartition: bad part '" + item + "'");
    parts.push_back(v);
  }
  return OrderedPartition(std::move(parts));
}

OrderedPartition OrderedPartition::whole(int r) { return OrderedPartition({r}); }

OrderedPartition OrderedPartition::discrete(int r) {
  if (r < 1) throw std::invalid_argument("OrderedPartition: r < 1");
  return OrderedPartition(std::vector<int>(r, 1));
}

std::string OrderedPartition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

PartitionChain::PartitionChain(std::vector<OrderedPartition> levels)
    : levels_(std::move(levels)) {
  if (levels_.empty()) throw std::invalid_argument("PartitionChain: empty");
  const int r = levels_.front().total();
  if (static_cast<int>(levels_.size()) != r)
    throw std::invalid_argument("PartitionChain: expected " + std::to_string(r) +
                                " levels");
  for (int s = 1; s <= r; ++s) {
    const OrderedPartition& lv = levels_[s - 1];
    if (lv.total() != r) throw std::invalid_argument("PartitionChain: mixed totals");
    if (lv.size() != s)
      throw std::invalid_argument("PartitionChain: level " + std::to_string(s) +
                                  " must have " + std::to_string(s) + " parts");
    if (s > 1 && !refines(levels_[s - 2], lv))
      throw std::invalid_argument("PartitionChain: level " + std::to_string(s) +
                                  " does not refine its predecessor");
  }
}

PartitionChain PartitionChain::parse(const std::string& text) {
  std::vector<OrderedPartition> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '>')) levels.push_back(OrderedPartition::parse(item));
  return PartitionChain(std::move(levels));
}

std::string PartitionChain::to_string() const {
  std::string out;
  for (size_t i = 0; i < levels_.size(); ++i) {
    if (i) out += '>';
    out += levels_[i].to_string();
  }
  return out;
}

std::vector<OrderedPartition> compositions(int r) {
  if (r < 1) throw std::invalid_argument("compositions: r < 1");
  std::vector<OrderedPartition> out;
  std::vector<int> cur;
  // lexicographic: first part ascending, then recurse
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(OrderedPartition(cur));
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      self(self, rest - first);
      cur.pop_back();
    }
  };
  rec(rec, r);
  return out;
}

bool refines(const OrderedPartition& coarse, const OrderedPartition& fine) {
  if (coarse.total() != fine.total()) return false;
  // greedily consume fine parts summing to each coarse part in order
  size_t fi = 0;
  const auto& fp = fine.parts();
  for (int target : coarse.parts()) {
    int acc = 0;
    while (acc < target) {
      if (fi >= fp.size()) return false;
      acc += fp[fi++];
    }
    if (acc != target) return false;
  }
  return fi == fp.size();
}

std::vector<OrderedPartition> one_split_refinements(const OrderedPartition& p) {
  std::vector<OrderedPartition> out;
  const auto& parts = p.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int left = 1; left < parts[i]; ++left) {
      std::vector<int> next(parts.begin(), parts.end());
      next[i] = left;
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(i) + 1, parts[i] - left);
      out.push_back(OrderedPartition(std::move(next)));
    }
  }
  return out;  // (position asc, left size asc) == lexicographic ascending
}

std::vector<PartitionChain> chains(int r) {
  if (r < 1) throw std::invalid_argument("chains: r < 1");
  std::vector<PartitionChain> out;
  std::vector<OrderedPartition> cur{OrderedPartition::whole(r)};
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(PartitionChain(cur));
      return;
    }
    for (const OrderedPartition& next : one_split_refinements(cur.back())) {
      cur.push_back(next);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace ordmatch
