#include "coxcubes/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace coxcubes::text {

using nlohmann::json;

static std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Word parse_word(const std::string& s) {
  Word out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::string tok = cur;
    cur.clear();
    if (tok == "e" || tok == "1") return;
    if (tok[0] == 's') tok = tok.substr(1);
    size_t pos = 0;
    int idx;
    try {
      idx = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed word token");
    }
    if (pos != tok.size() || idx < 1)
      throw std::invalid_argument("malformed word token");
    out.push_back(idx);
  };
  for (char c : s) {
    if (c == ' ' || c == '*' || c == '\t')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

Permutation parse_element(int rank, const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw std::invalid_argument("empty element text");
  if (s[0] == '[') {
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw std::invalid_argument("malformed one-line notation");
    std::vector<int> img;
    for (const auto& v : j) {
      if (!v.is_number_integer())
        throw std::invalid_argument("malformed one-line notation");
      img.push_back(v.get<int>());
    }
    if (static_cast<int>(img.size()) != rank + 1)
      throw std::invalid_argument("one-line notation has wrong length");
    return Permutation(img);
  }
  Permutation out = Permutation::identity(rank);
  for (int letter : parse_word(s)) {
    if (letter > rank) throw std::invalid_argument("generator index out of range");
    out = compose(out, Permutation::simple(rank, letter));
  }
  return out;
}

Root parse_root(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw std::invalid_argument("empty root text");
  if (s[0] == '(') {
    int lo, hi;
    char l, comma, r;
    std::istringstream in(s);
    if (!(in >> l >> lo >> comma >> hi >> r) || l != '(' || comma != ',' ||
        r != ')' || !(1 <= lo && lo < hi))
      throw std::invalid_argument("malformed root");
    return Root{lo, hi};
  }
  // Coefficient form "a1+a2+a3": indices must be consecutive.
  std::vector<int> idx;
  std::string cur;
  for (char c : s + "+") {
    if (c == '+') {
      if (cur.size() < 2 || cur[0] != 'a')
        throw std::invalid_argument("malformed root");
      idx.push_back(std::stoi(cur.substr(1)));
      cur.clear();
    } else {
      cur += c;
    }
  }
  std::sort(idx.begin(), idx.end());
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i] != idx[i - 1] + 1)
      throw std::invalid_argument("root support must be an interval");
  return Root{idx.front(), idx.back() + 1};
}

GeneratorSet parse_generator_set(int rank, const std::string& s) {
  GeneratorSet out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) continue;
      int idx = std::stoi(cur);
      cur.clear();
      if (idx < 1 || idx > rank)
        throw std::invalid_argument("generator index out of range");
      out.insert(idx);
    } else if (c != ' ') {
      cur += c;
    }
  }
  return out;
}

std::string to_json(const Permutation& x) { return json(x.image()).dump(); }

Permutation permutation_from_json(const std::string& s) {
  json j = json::parse(s);
  return Permutation(j.get<std::vector<int>>());
}

std::string to_json(const CoxeterCube& c) {
  json edges = json::object();
  for (const auto& [label, value] : c.edges()) edges[label] = value.image();
  return json{{"rank", c.rank()}, {"edges", edges}}.dump();
}

CoxeterCube cube_from_json(const std::string& s) {
  json j = json::parse(s);
  std::map<EdgeLabel, Permutation> edges;
  for (const auto& [label, value] : j.at("edges").items())
    edges.emplace(label, Permutation(value.get<std::vector<int>>()));
  return CoxeterCube(j.at("rank").get<int>(), std::move(edges));
}

std::string to_json(const RectanglePartition& P) {
  json rects = json::array();
  for (const BasedRectangle& R : P.rectangles)
    rects.push_back({R.lo, R.base, R.hi});
  return json{{"rank", P.rank}, {"rectangles", rects}}.dump();
}

RectanglePartition partition_from_json(const std::string& s) {
  json j = json::parse(s);
  RectanglePartition P;
  P.rank = j.at("rank").get<int>();
  for (const auto& r : j.at("rectangles")) {
    if (!r.is_array() || r.size() != 3)
      throw std::invalid_argument("rectangle must be a triple");
    P.rectangles.insert(BasedRectangle{r[0].get<int>(), r[1].get<int>(),
                                       r[2].get<int>()});
  }
  return P;
}

static json tree_json(const BinaryTree& t) {
  if (t.is_leaf()) return 0;
  return json::array({tree_json(t.kids[0]), tree_json(t.kids[1])});
}

std::string to_json(const BinaryTree& t) { return tree_json(t).dump(); }

static BinaryTree tree_parse(const json& j) {
  if (j.is_number_integer() && j.get<int>() == 0) return BinaryTree::leaf();
  if (j.is_array() && j.size() == 2)
    return BinaryTree::node(tree_parse(j[0]), tree_parse(j[1]));
  throw std::invalid_argument("malformed tree");
}

BinaryTree tree_from_json(const std::string& s) {
  return tree_parse(json::parse(s));
}

generic::CoxeterMatrix matrix_from_json(const std::string& s) {
  json j = json::parse(s);
  generic::CoxeterMatrix cm;
  cm.m = j.at("m").get<std::vector<std::vector<int>>>();
  if (j.at("size").get<int>() != cm.size())
    throw std::invalid_argument("matrix size field disagrees with entries");
  return cm;
}

std::string to_dot(const CoxeterCube& c) {
  std::ostringstream os;
  os << "digraph cube {\n";
  for (const auto& [label, value] : c.edges()) {
    std::string from = label, to = label;
    size_t star = label.find('*');
    from[star] = '0';
    to[star] = '1';
    os << "  \"" << from << "\" -> \"" << to << "\" [label=\"" << value.str()
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

static void tree_dot(const BinaryTree& t, const std::string& id,
                     std::ostringstream& os) {
  os << "  \"" << id << "\" [label=\"" << (t.is_leaf() ? "leaf" : "") << "\""
     << (t.is_leaf() ? ", shape=point" : ", shape=circle") << "];\n";
  if (t.is_leaf()) return;
  for (int i = 0; i < 2; ++i) {
    std::string child = id + (i == 0 ? "L" : "R");
    os << "  \"" << id << "\" -> \"" << child << "\";\n";
    tree_dot(t.kids[i], child, os);
  }
}

std::string to_dot(const BinaryTree& t) {
  std::ostringstream os;
  os << "digraph tree {\n";
  tree_dot(t, "T", os);
  os << "}\n";
  return os.str();
}

std::string to_ascii(const RectanglePartition& P) {
  // Row for depth d (top = deepest), root (i,j) at column i+j.
  std::vector<BasedRectangle> rects(P.rectangles.begin(), P.rectangles.end());
  std::ostringstream os;
  for (int d = P.rank; d >= 1; --d) {
    std::string row(2 * (P.rank + 1) + 1, ' ');
    for (int i = 1; i + d <= P.rank + 1; ++i) {
      int j = i + d;
      char mark = '?';
      for (size_t k = 0; k < rects.size(); ++k) {
        const BasedRectangle& R = rects[k];
        if (R.lo <= i && i <= R.base && R.base < j && j <= R.hi)
          mark = static_cast<char>('A' + k);
      }
      row[i + j] = mark;
    }
    os << row.substr(0, row.find_last_not_of(' ') + 1) << "\n";
  }
  return os.str();
}

}  // namespace coxcubes::text
