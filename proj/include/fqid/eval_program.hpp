#pragma once

#include <map>
#include <vector>

#include "fqid/freepoly.hpp"

namespace fqid {

/// A polynomial's terms flattened into a shared-subtree DAG. Nodes appear in
/// evaluation order: children before parents.
class EvalProgram {
 public:
  struct Node {
    int var = 0;  // > 0 for a leaf
    int left = -1;
    int right = -1;
  };
  struct TermRef {
    int node;
    Scalar coeff;
  };

  explicit EvalProgram(const FreePoly& poly) {
    std::map<Term, int> seen;
    for (const auto& [term, coeff] : poly.terms()) terms_.push_back({intern(term, seen), coeff});
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<TermRef>& terms() const { return terms_; }

 private:
  int intern(const Term& t, std::map<Term, int>& seen) {
    if (auto it = seen.find(t); it != seen.end()) return it->second;
    Node n;
    if (t.is_leaf()) {
      n.var = t.var();
    } else {
      n.left = intern(t.left(), seen);
      n.right = intern(t.right(), seen);
    }
    nodes_.push_back(n);
    const int id = static_cast<int>(nodes_.size()) - 1;
    seen.emplace(t, id);
    return id;
  }

  std::vector<Node> nodes_;
  std::vector<TermRef> terms_;
};

}  // namespace fqid
