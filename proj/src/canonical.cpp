#include "canonical.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fsmaps/error.hpp"

namespace fsmaps::detail {

namespace {

struct Code {
  std::vector<int> order;  // breadth-first visiting order (old points)
  std::vector<int> code;   // local labels of a(x), b(x) in visiting order
};

// Breadth-first labelling of the component of `start`, assigning local labels from `base`.
Code bfs_code(const Permutation& a, const Permutation& b, int start, std::vector<int>& local, int base) {
  Code c;
  local[start] = base;
  c.order.push_back(start);
  for (std::size_t head = 0; head < c.order.size(); ++head) {
    int x = c.order[head];
    for (int y : {a(x), b(x)}) {
      if (local[y] < 0) {
        local[y] = base + static_cast<int>(c.order.size());
        c.order.push_back(y);
      }
      c.code.push_back(local[y]);
    }
  }
  return c;
}

std::uint64_t checked_factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Relabeling canonical_relabeling(const Permutation& a, const Permutation& b, std::span<const int> roots) {
  const std::size_t n = a.size();
  Relabeling r;
  r.new_label.assign(n, -1);
  int next = 0;
  for (int root : roots) {
    if (r.new_label[root] >= 0) continue;
    Code c = bfs_code(a, b, root, r.new_label, next);
    next += static_cast<int>(c.order.size());
  }

  // Closed components: minimal code over all starting points.
  struct Closed {
    std::vector<int> code;
    std::vector<int> order;
    std::uint64_t symmetric_starts = 0;
  };
  std::vector<Closed> closed;
  std::vector<char> assigned(n, 0);
  for (std::size_t x = 0; x < n; ++x) assigned[x] = r.new_label[x] >= 0;
  std::vector<int> scratch(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::fill(scratch.begin(), scratch.end(), -1);
    Code component = bfs_code(a, b, static_cast<int>(x), scratch, 0);
    for (int y : component.order) assigned[y] = 1;
    Closed best{component.code, component.order, 1};
    for (std::size_t i = 1; i < component.order.size(); ++i) {
      std::fill(scratch.begin(), scratch.end(), -1);
      Code candidate = bfs_code(a, b, component.order[i], scratch, 0);
      if (candidate.code < best.code) {
        best = Closed{std::move(candidate.code), std::move(candidate.order), 1};
      } else if (candidate.code == best.code) {
        ++best.symmetric_starts;
      }
    }
    closed.push_back(std::move(best));
  }
  std::stable_sort(closed.begin(), closed.end(), [](const Closed& l, const Closed& rhs) {
    if (l.code.size() != rhs.code.size()) return l.code.size() < rhs.code.size();
    return l.code < rhs.code;
  });
  for (std::size_t i = 0; i < closed.size();) {
    std::size_t j = i;
    while (j < closed.size() && closed[j].code == closed[i].code) ++j;
    std::uint64_t copies = j - i;
    r.automorphisms *= checked_factorial(copies);
    for (std::uint64_t k = 0; k < copies; ++k) r.automorphisms *= closed[i].symmetric_starts;
    i = j;
  }
  for (const auto& c : closed)
    for (int y : c.order) r.new_label[y] = next++;
  return r;
}

Permutation relabel(const Permutation& p, const std::vector<int>& new_label) {
  std::vector<int> images(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) images[new_label[x]] = new_label[p(static_cast<int>(x))];
  return Permutation::from_images(std::move(images));
}

std::string canonical_key(const Permutation& a, const Permutation& b, std::span<const int> roots) {
  Relabeling r = canonical_relabeling(a, b, roots);
  const std::size_t n = a.size();
  std::string key(2 * n + roots.size() + 1, '\0');
  key[0] = static_cast<char>(n);
  for (std::size_t x = 0; x < n; ++x) {
    key[1 + r.new_label[x]] = static_cast<char>(r.new_label[a(static_cast<int>(x))]);
    key[1 + n + r.new_label[x]] = static_cast<char>(r.new_label[b(static_cast<int>(x))]);
  }
  for (std::size_t i = 0; i < roots.size(); ++i) key[1 + 2 * n + i] = static_cast<char>(r.new_label[roots[i]]);
  return key;
}

void for_each_rooted_class(int n, const std::vector<Permutation>& sigma1_choices,
                           const std::function<void(const Permutation&, const Permutation&,
                                                    const std::vector<int>&)>& visit) {
  if (n < 1 || n > 16) throw InvalidInput("census: ground size outside [1, 16]");
  std::unordered_set<std::string> keys;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (const auto& sigma1 : sigma1_choices) {
    std::iota(images.begin(), images.end(), 0);
    do {
      Permutation sigma0 = Permutation::from_images(images);
      Permutation sigma2 = (sigma0 * sigma1).inverse();
      auto faces = sigma2.cycles();
      std::vector<int> face_of(static_cast<std::size_t>(n));
      for (std::size_t f = 0; f < faces.size(); ++f)
        for (int x : faces[f]) face_of[x] = static_cast<int>(f);

      // Up to relabeling the first root is point 0.
      std::vector<int> roots{0};
      std::vector<char> used(faces.size(), 0);
      used[face_of[0]] = 1;
      std::function<void()> extend = [&]() {
        keys.insert(canonical_key(sigma0, sigma1, roots));
        for (std::size_t f = 0; f < faces.size(); ++f) {
          if (used[f]) continue;
          used[f] = 1;
          for (int x : faces[f]) {
            roots.push_back(x);
            extend();
            roots.pop_back();
          }
          used[f] = 0;
        }
      };
      extend();
    } while (std::next_permutation(images.begin(), images.end()));
  }

  std::vector<std::string> sorted(keys.begin(), keys.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& key : sorted) {
    const auto size = static_cast<std::size_t>(key[0]);
    std::vector<int> a(size), b(size);
    for (std::size_t x = 0; x < size; ++x) {
      a[x] = key[1 + x];
      b[x] = key[1 + size + x];
    }
    std::vector<int> roots;
    for (std::size_t i = 1 + 2 * size; i < key.size(); ++i) roots.push_back(key[i]);
    visit(Permutation::from_images(std::move(a)), Permutation::from_images(std::move(b)), roots);
  }
}

}  // namespace fsmaps::detail
