#include "coxcubes/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "coxcubes/cubes.hpp"
#include "coxcubes/generic.hpp"
#include "coxcubes/groupoid.hpp"
#include "coxcubes/rect_trees.hpp"
#include "coxcubes/text.hpp"
#include "coxcubes/transfer.hpp"

namespace coxcubes::cli {

using nlohmann::json;

namespace {

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, const std::string& stdin_text) {
  if (path == "-") return stdin_text;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json square_json(const CoxeterSquare& q) {
  return json{{"w", q.w.image()},
              {"x", q.x.image()},
              {"y", q.y.image()},
              {"z", q.z.image()}};
}

json elements_json(const std::vector<Permutation>& xs) {
  json out = json::array();
  for (const Permutation& x : xs) out.push_back(x.image());
  return out;
}

}  // namespace

RunResult run_command(const std::vector<std::string>& argv,
                      const std::string& stdin_text) {
  CLI::App app{"Coxeter cubes: inversion-set transfer, squares and cubes, "
               "rectangle partitions, binary trees"};
  app.require_subcommand(1);

  int rank = 0, alpha = 0, k = 0, dir_i = 0, dir_j = 0, tri_a = 0, tri_c = 0;
  int cap = generic::kDefaultRootCap, pairs = 100, max_len = 10;
  unsigned seed = 0;
  std::string base_str, source_str, move_str = "diagonal", format = "json";
  std::string input = "-";
  std::vector<std::string> elems;
  std::string tree_text;

  std::ostringstream out;
  std::function<void()> action;

  auto add_rank = [&](CLI::App* cmd) {
    cmd->add_option("--rank", rank, "Coxeter rank n of A_n")->required();
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "input file, - for stdin");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format");
  };

  // square ------------------------------------------------------------
  CLI::App* square = app.add_subcommand("square", "Coxeter squares");
  square->require_subcommand(1);

  CLI::App* sq_check = square->add_subcommand("check", "validate (w,x,y,z)");
  add_rank(sq_check);
  sq_check->add_option("elements", elems, "w x y z")->expected(4);
  sq_check->callback([&] {
    action = [&] {
      CoxeterSquare q{text::parse_element(rank, elems[0]),
                      text::parse_element(rank, elems[1]),
                      text::parse_element(rank, elems[2]),
                      text::parse_element(rank, elems[3])};
      if (!square_validate(q)) throw DomainFailure("invalid square");
      out << "valid\n";
    };
  });

  CLI::App* sq_complete = square->add_subcommand("complete",
                                                 "square on terminal edges");
  add_rank(sq_complete);
  sq_complete->add_option("elements", elems, "x1 x2")->expected(2);
  sq_complete->callback([&] {
    action = [&] {
      auto q = square_complete(text::parse_element(rank, elems[0]),
                               text::parse_element(rank, elems[1]));
      if (!q) throw DomainFailure("no square with these terminal edges");
      out << square_json(*q).dump() << "\n";
    };
  });

  CLI::App* sq_reorient = square->add_subcommand("reorient", "reorient a square");
  add_rank(sq_reorient);
  sq_reorient->add_option("--move", move_str,
                          "diagonal | flip-horizontal | flip-vertical");
  sq_reorient->add_option("elements", elems, "w x y z")->expected(4);
  sq_reorient->callback([&] {
    action = [&] {
      ReorientMove move;
      if (move_str == "diagonal")
        move = ReorientMove::diagonal;
      else if (move_str == "flip-horizontal")
        move = ReorientMove::flip_horizontal;
      else if (move_str == "flip-vertical")
        move = ReorientMove::flip_vertical;
      else
        throw std::invalid_argument("unknown move " + move_str);
      CoxeterSquare q{text::parse_element(rank, elems[0]),
                      text::parse_element(rank, elems[1]),
                      text::parse_element(rank, elems[2]),
                      text::parse_element(rank, elems[3])};
      if (!square_validate(q)) throw DomainFailure("invalid square");
      out << square_json(square_reorient(q, move)).dump() << "\n";
    };
  });

  // cube --------------------------------------------------------------
  CLI::App* cube = app.add_subcommand("cube", "Coxeter n-cubes");
  cube->require_subcommand(1);

  CLI::App* cb_enum = cube->add_subcommand("enumerate",
                                           "cube classes modulo reorientation");
  add_rank(cb_enum);
  cb_enum->callback([&] {
    action = [&] {
      CubeClasses classes = enumerate_cube_classes(rank);
      json cls = json::array();
      for (const CoxeterCube& c : classes.representatives)
        cls.push_back(elements_json(cube_canonical(c)));
      out << json{{"rank", rank}, {"count", classes.count}, {"classes", cls}}
                 .dump()
          << "\n";
    };
  });

  CLI::App* cb_validate = cube->add_subcommand("validate", "validate a cube");
  add_input(cb_validate);
  cb_validate->callback([&] {
    action = [&] {
      CoxeterCube c = text::cube_from_json(slurp(input, stdin_text));
      if (!cube_validate(c)) throw DomainFailure("invalid cube");
      out << "valid\n";
    };
  });

  CLI::App* cb_from = cube->add_subcommand("from-edges",
                                           "reconstruct from terminal edges");
  add_rank(cb_from);
  add_format(cb_from);
  cb_from->add_option("elements", elems, "terminal edges")->expected(-1);
  cb_from->callback([&] {
    action = [&] {
      std::vector<Permutation> terminal;
      for (const std::string& e : elems)
        terminal.push_back(text::parse_element(rank, e));
      auto c = cube_from_terminal_edges(terminal);
      if (!c) throw DomainFailure("no cube with these terminal edges");
      if (format == "dot")
        out << text::to_dot(*c);
      else
        out << text::to_json(*c) << "\n";
    };
  });

  CLI::App* cb_flip = cube->add_subcommand("flip", "flip one direction");
  add_input(cb_flip);
  cb_flip->add_option("--k", k, "direction to flip")->required();
  cb_flip->callback([&] {
    action = [&] {
      CoxeterCube c = text::cube_from_json(slurp(input, stdin_text));
      if (!cube_validate(c)) throw DomainFailure("invalid cube");
      out << text::to_json(cube_flip(c, k)) << "\n";
    };
  });

  CLI::App* cb_canonical = cube->add_subcommand("canonical",
                                                "canonical terminal-edge set");
  add_input(cb_canonical);
  cb_canonical->callback([&] {
    action = [&] {
      CoxeterCube c = text::cube_from_json(slurp(input, stdin_text));
      if (!cube_validate(c)) throw DomainFailure("invalid cube");
      out << elements_json(cube_canonical(c)).dump() << "\n";
    };
  });

  CLI::App* cb_collapse = cube->add_subcommand("collapse",
                                               "collapse two directions");
  add_input(cb_collapse);
  cb_collapse->add_option("--i", dir_i)->required();
  cb_collapse->add_option("--j", dir_j)->required();
  cb_collapse->callback([&] {
    action = [&] {
      CoxeterCube c = text::cube_from_json(slurp(input, stdin_text));
      if (!cube_validate(c)) throw DomainFailure("invalid cube");
      out << text::to_json(cube_collapse(c, dir_i, dir_j)) << "\n";
    };
  });

  // transfer ----------------------------------------------------------
  CLI::App* transfer = app.add_subcommand("transfer", "w(Phi_x) = Phi_y");
  transfer->require_subcommand(1);

  CLI::App* tr_check = transfer->add_subcommand("check", "check a triple");
  add_rank(tr_check);
  tr_check->add_option("elements", elems, "w x y")->expected(3);
  tr_check->callback([&] {
    action = [&] {
      bool ok = transfer_check(text::parse_element(rank, elems[0]),
                               text::parse_element(rank, elems[1]),
                               text::parse_element(rank, elems[2]));
      if (!ok) throw DomainFailure("transfer does not hold");
      out << "true\n";
    };
  });

  CLI::App* tr_image = transfer->add_subcommand("image", "y with Phi_y = w(Phi_x)");
  add_rank(tr_image);
  tr_image->add_option("elements", elems, "w x")->expected(2);
  tr_image->callback([&] {
    action = [&] {
      auto y = transfer_image(text::parse_element(rank, elems[0]),
                              text::parse_element(rank, elems[1]));
      if (!y) throw DomainFailure("none");
      out << y->str() << "\n";
    };
  });

  CLI::App* tr_solve = transfer->add_subcommand("solve", "all w for (x, y)");
  add_rank(tr_solve);
  tr_solve->add_option("elements", elems, "x y")->expected(2);
  tr_solve->callback([&] {
    action = [&] {
      auto ws = solve_transfers(text::parse_element(rank, elems[0]),
                                text::parse_element(rank, elems[1]));
      if (ws.empty()) throw DomainFailure("no solution");
      out << elements_json(ws).dump() << "\n";
    };
  });

  // partition ---------------------------------------------------------
  CLI::App* partition = app.add_subcommand("partition",
                                           "based-rectangle partitions");
  partition->require_subcommand(1);

  CLI::App* pt_tree = partition->add_subcommand("to-tree", "bijection image");
  add_input(pt_tree);
  pt_tree->callback([&] {
    action = [&] {
      RectanglePartition P = text::partition_from_json(slurp(input, stdin_text));
      if (!partition_valid(P)) throw DomainFailure("invalid partition");
      out << text::to_json(partition_to_tree(P)) << "\n";
    };
  });

  CLI::App* pt_validate = partition->add_subcommand("validate", "check a partition");
  add_input(pt_validate);
  pt_validate->callback([&] {
    action = [&] {
      RectanglePartition P = text::partition_from_json(slurp(input, stdin_text));
      if (!partition_valid(P)) throw DomainFailure("invalid partition");
      out << "valid\n";
    };
  });

  CLI::App* pt_flip = partition->add_subcommand("flip", "flip a subtriangle");
  add_input(pt_flip);
  add_format(pt_flip);
  pt_flip->add_option("--a", tri_a, "interval start")->required();
  pt_flip->add_option("--c", tri_c, "interval end")->required();
  pt_flip->callback([&] {
    action = [&] {
      RectanglePartition P = text::partition_from_json(slurp(input, stdin_text));
      if (!partition_valid(P)) throw DomainFailure("invalid partition");
      RectanglePartition flipped;
      try {
        flipped = flip_subtriangle(P, SubtriangleInterval{tri_a, tri_c});
      } catch (const std::invalid_argument& e) {
        throw DomainFailure(e.what());
      }
      if (format == "ascii")
        out << text::to_ascii(flipped);
      else
        out << text::to_json(flipped) << "\n";
    };
  });

  CLI::App* pt_show = partition->add_subcommand("show", "ascii root poset");
  add_input(pt_show);
  pt_show->callback([&] {
    action = [&] {
      RectanglePartition P = text::partition_from_json(slurp(input, stdin_text));
      if (!partition_valid(P)) throw DomainFailure("invalid partition");
      out << text::to_ascii(P);
    };
  });

  // tree --------------------------------------------------------------
  CLI::App* tree = app.add_subcommand("tree", "binary trees");
  tree->require_subcommand(1);

  CLI::App* tree_part = tree->add_subcommand("to-partition", "bijection preimage");
  add_rank(tree_part);
  tree_part->add_option("tree", tree_text, "tree as nested arrays")->required();
  tree_part->callback([&] {
    action = [&] {
      BinaryTree t = text::tree_from_json(tree_text);
      RectanglePartition P;
      try {
        P = tree_to_partition(rank, t);
      } catch (const std::invalid_argument& e) {
        throw DomainFailure(e.what());
      }
      out << text::to_json(P) << "\n";
    };
  });

  CLI::App* tree_canon = tree->add_subcommand("canonical",
                                              "isomorphism-class representative");
  add_format(tree_canon);
  tree_canon->add_option("tree", tree_text, "tree as nested arrays")->required();
  tree_canon->callback([&] {
    action = [&] {
      BinaryTree t = tree_canonical(text::tree_from_json(tree_text));
      if (format == "dot")
        out << text::to_dot(t);
      else
        out << text::to_json(t) << "\n";
    };
  });

  // edge --------------------------------------------------------------
  CLI::App* edge = app.add_subcommand("edge", "cube edge elements");
  edge->require_subcommand(1);

  CLI::App* ed_list = edge->add_subcommand("list", "all of Edge_n");
  add_rank(ed_list);
  ed_list->callback([&] {
    action = [&] {
      json arr = json::array();
      for (const Permutation& x : edge_set(rank)) arr.push_back(x.image());
      out << arr.dump() << "\n";
    };
  });

  CLI::App* ed_count = edge->add_subcommand("count", "|Edge_n|");
  add_rank(ed_count);
  ed_count->callback([&] {
    action = [&] { out << edge_set(rank).size() << "\n"; };
  });

  // nu / decompose ----------------------------------------------------
  CLI::App* nu_cmd = app.add_subcommand("nu", "Brink-Howlett generator");
  add_rank(nu_cmd);
  nu_cmd->add_option("--alpha", alpha, "adjoined generator index")->required();
  nu_cmd->add_option("--base", base_str, "base indices, e.g. \"1,3\"");
  nu_cmd->callback([&] {
    action = [&] {
      NuGenerator g = nu(rank, alpha, text::parse_generator_set(rank, base_str));
      out << json{{"alpha", g.alpha},
                  {"base", std::vector<int>(g.base.begin(), g.base.end())},
                  {"element", g.element.image()},
                  {"word", canonical_reduced_word(g.element)}}
                 .dump()
          << "\n";
    };
  });

  CLI::App* decomp = app.add_subcommand("decompose",
                                        "factor a groupoid morphism into nu's");
  add_rank(decomp);
  decomp->add_option("--source", source_str, "source indices, e.g. \"1\"");
  decomp->add_option("element", tree_text, "morphism element")->required();
  decomp->callback([&] {
    action = [&] {
      GroupoidMorphism m;
      m.source = text::parse_generator_set(rank, source_str);
      m.element = text::parse_element(rank, tree_text);
      try {
        m.target = morphism_target(m.source, m.element);
      } catch (const std::invalid_argument& e) {
        throw DomainFailure(e.what());
      }
      json arr = json::array();
      for (const NuGenerator& g : decompose_morphism(m))
        arr.push_back({{"alpha", g.alpha},
                       {"base", std::vector<int>(g.base.begin(), g.base.end())},
                       {"element", g.element.image()}});
      out << arr.dump() << "\n";
    };
  });

  // generic -----------------------------------------------------------
  CLI::App* generic_cmd = app.add_subcommand("generic",
                                             "numeric engine for any matrix");
  generic_cmd->require_subcommand(1);

  CLI::App* gn_roots = generic_cmd->add_subcommand("roots",
                                                   "positive root count");
  add_input(gn_roots);
  gn_roots->add_option("--cap", cap, "generation cap");
  gn_roots->callback([&] {
    action = [&] {
      generic::System sys(text::matrix_from_json(slurp(input, stdin_text)));
      try {
        out << sys.generate_roots(cap).size() << "\n";
      } catch (const generic::CapExceeded& e) {
        throw DomainFailure(e.what());
      }
    };
  });

  CLI::App* gn_cocycle = generic_cmd->add_subcommand(
      "check-cocycle", "N(xy) = N(x) symmetric-difference xN(y)x^{-1}");
  add_input(gn_cocycle);
  gn_cocycle->add_option("--pairs", pairs, "random word pairs");
  gn_cocycle->add_option("--seed", seed, "RNG seed");
  gn_cocycle->add_option("--bound", max_len, "max word length");
  gn_cocycle->callback([&] {
    action = [&] {
      generic::System sys(text::matrix_from_json(slurp(input, stdin_text)));
      std::mt19937 rng(seed);
      std::uniform_int_distribution<int> letter(1, sys.size());
      std::uniform_int_distribution<int> len(0, max_len);
      int violations = 0;
      for (int trial = 0; trial < pairs; ++trial) {
        Word wx(len(rng)), wy(len(rng));
        for (int& l : wx) l = letter(rng);
        for (int& l : wy) l = letter(rng);
        generic::Element ex = sys.evaluate_word(wx);
        Word wxy = wx;
        wxy.insert(wxy.end(), wy.begin(), wy.end());
        auto nx = sys.reflection_cocycle(sys.evaluate_word(wx));
        auto ny = sys.reflection_cocycle(sys.evaluate_word(wy));
        auto nxy = sys.reflection_cocycle(sys.evaluate_word(wxy));
        // Symmetric difference of N(x) and x N(y) x^{-1} in root encoding.
        std::vector<generic::Vec> expected;
        std::vector<generic::Vec> conj;
        for (const generic::Vec& beta : ny) {
          generic::Vec image = ex.apply(beta);
          if (!generic::vec_positive(image))
            for (double& coeff : image) coeff = -coeff;
          conj.push_back(image);
        }
        auto contains = [](const std::vector<generic::Vec>& set,
                           const generic::Vec& v) {
          for (const generic::Vec& r : set)
            if (generic::vec_eq(r, v)) return true;
          return false;
        };
        for (const generic::Vec& r : nx)
          if (!contains(conj, r)) expected.push_back(r);
        for (const generic::Vec& r : conj)
          if (!contains(nx, r)) expected.push_back(r);
        if (!generic::root_set_eq(expected, nxy)) ++violations;
      }
      out << "checked " << pairs << " pairs, " << violations << " violations\n";
      if (violations) throw DomainFailure("cocycle identity violated");
    };
  });

  // dispatch ----------------------------------------------------------
  std::vector<const char*> cargv{"coxcubes"};
  for (const std::string& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    err << e.what() << "\n";
    return {2, err.str()};
  }

  try {
    action();
    return {0, out.str()};
  } catch (const DomainFailure& e) {
    return {1, out.str() + e.what() + "\n"};
  } catch (const generic::CapExceeded& e) {
    return {1, out.str() + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, out.str() + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, out.str() + e.what() + "\n"};
  }
}

}  // namespace coxcubes::cli
