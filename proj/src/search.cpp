#include "gradeforge/search.hpp"

#include <algorithm>

namespace gradeforge::search {

namespace {

class HomSolver {
 public:
  HomSolver(HomProblem const& p, NodeCounter& counter,
            std::function<void(ElementMap const&)> const& emit)
      : _p(p),
        _counter(counter),
        _emit(emit),
        _image(p.source_size, -1) {}

  void run() {
    for (auto const& d : _p.domains)
      if (d.empty()) return;
    descend();
  }

 private:
  std::int32_t src(std::size_t a, std::size_t b) const {
    return _p.source[a * _p.source_size + b];
  }
  std::int32_t tgt(std::int32_t x, std::int32_t y) const {
    return _p.target[static_cast<std::size_t>(x) * _p.target_size +
                     static_cast<std::size_t>(y)];
  }

  // Checks one constrained source pair; may force the image of the product.
  bool check_pair(std::size_t a, std::size_t b) {
    std::int32_t r = src(a, b);
    if (r < 0) return true;
    std::int32_t v = tgt(_image[a], _image[b]);
    if (v < 0) return false;
    auto ru = static_cast<std::size_t>(r);
    if (_image[ru] >= 0) return _image[ru] == v;
    if (!_p.domains[ru].contains(static_cast<std::size_t>(v))) return false;
    assign(ru, v);
    return true;
  }

  void assign(std::size_t a, std::int32_t v) {
    _image[a] = v;
    _trail.push_back(a);
    _queue.push_back(a);
  }

  bool propagate() {
    while (!_queue.empty()) {
      std::size_t a = _queue.back();
      _queue.pop_back();
      for (std::size_t b = 0; b < _p.source_size; ++b) {
        if (_image[b] < 0) continue;
        if (!check_pair(a, b) || !check_pair(b, a)) {
          _queue.clear();
          return false;
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (_trail.size() > mark) {
      _image[_trail.back()] = -1;
      _trail.pop_back();
    }
  }

  void descend() {
    _counter.tick();
    std::size_t next = 0;
    while (next < _p.source_size && _image[next] >= 0) ++next;
    if (next == _p.source_size) {
      ElementMap out(_p.source_size);
      std::transform(_image.begin(), _image.end(), out.begin(),
                     [](std::int32_t v) { return static_cast<Element>(v); });
      _emit(out);
      return;
    }
    _p.domains[next].for_each([&](std::size_t v) {
      std::size_t mark = _trail.size();
      assign(next, static_cast<std::int32_t>(v));
      if (propagate()) descend();
      undo_to(mark);
    });
  }

  HomProblem const& _p;
  NodeCounter& _counter;
  std::function<void(ElementMap const&)> const& _emit;
  std::vector<std::int32_t> _image;
  std::vector<std::size_t> _trail;
  std::vector<std::size_t> _queue;
};

class SubsetSolver {
 public:
  SubsetSolver(std::size_t size, std::vector<std::int32_t> const& product,
               NodeCounter& counter)
      : _size(size), _product(product), _counter(counter) {}

  void run(ElementSet const& required) {
    auto start = close(_size, _product, required);
    if (!start) return;
    descend(0, *start, ElementSet{});
    std::sort(_out.begin(), _out.end());
  }

  std::vector<ElementSet> take() { return std::move(_out); }

 private:
  void descend(std::size_t next, ElementSet const& in, ElementSet excluded) {
    _counter.tick();
    while (next < _size && in.contains(next)) ++next;
    if (next == _size) {
      _out.push_back(in);
      return;
    }
    excluded.insert(next);
    descend(next + 1, in, excluded);
    excluded.erase(next);

    ElementSet seed = in;
    seed.insert(next);
    auto grown = close(_size, _product, seed);
    if (grown && !grown->intersects(excluded)) descend(next + 1, *grown, excluded);
  }

  std::size_t _size;
  std::vector<std::int32_t> const& _product;
  NodeCounter& _counter;
  std::vector<ElementSet> _out;
};

}  // namespace

void solve_homs(HomProblem const& problem, NodeCounter& counter,
                std::function<void(ElementMap const&)> const& emit) {
  HomSolver(problem, counter, emit).run();
}

std::optional<ElementSet> close(std::size_t size,
                                std::vector<std::int32_t> const& product,
                                ElementSet const& seed) {
  ElementSet in = seed;
  std::vector<std::size_t> work = seed.members();
  auto visit = [&](std::size_t a, std::size_t b) {
    std::int32_t r = product[a * size + b];
    if (r == kPoison) return false;
    if (r >= 0 && !in.contains(static_cast<std::size_t>(r))) {
      in.insert(static_cast<std::size_t>(r));
      work.push_back(static_cast<std::size_t>(r));
    }
    return true;
  };
  // Each element is multiplied against every element popped before it, so
  // every pair is visited once.
  std::vector<std::size_t> done;
  while (!work.empty()) {
    std::size_t a = work.back();
    work.pop_back();
    done.push_back(a);
    for (std::size_t i = 0; i < done.size(); ++i) {
      std::size_t b = done[i];
      if (!visit(a, b) || !visit(b, a)) return std::nullopt;
    }
  }
  return in;
}

std::vector<ElementSet> closed_subsets(std::size_t size,
                                       std::vector<std::int32_t> const& product,
                                       ElementSet const& required,
                                       NodeCounter& counter) {
  if (size > kMaxElements) {
    throw Error(ErrorCode::size_overflow,
                "carrier of " + std::to_string(size) + " elements exceeds " +
                    std::to_string(kMaxElements));
  }
  SubsetSolver solver(size, product, counter);
  solver.run(required);
  return solver.take();
}

}  // namespace gradeforge::search
