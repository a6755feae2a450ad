#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "pivd/generator.hpp"
#include "pivd/io.hpp"
#include "pivd/kernel.hpp"
#include "test_support.hpp"

using namespace pivd;

TEST_CASE("edgelist basics") {
  ParsedInstance p3 = parse_graph("0 1\n1 2", GraphFormat::edgelist);
  CHECK(p3.graph == support::path_graph(3));
  CHECK_FALSE(p3.k.has_value());

  ParsedInstance isolated = parse_graph("n=3\n", GraphFormat::edgelist);
  CHECK(isolated.graph == Graph::with_vertex_count(3));

  ParsedInstance with_k = parse_graph("# comment\nn=4 k=2\n0 1\n", GraphFormat::edgelist);
  CHECK(with_k.k == 2);
  CHECK(with_k.graph.vertex_count() == 4);

  CHECK_THROWS_AS(parse_graph("0\n", GraphFormat::edgelist), ParseError);
  CHECK_THROWS_AS(parse_graph("0 x\n", GraphFormat::edgelist), ParseError);
  CHECK_THROWS_AS(parse_graph("n=2\n0 5\n", GraphFormat::edgelist), ParseError);
  try {
    parse_graph("0 1\nbroken line\n", GraphFormat::edgelist);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("graph6 matches reference encodings") {
  // reference bytes produced by an independent graph6 encoder
  CHECK(parse_graph("Dhc", GraphFormat::graph6).graph == support::cycle_graph(5));
  CHECK(parse_graph("Ch", GraphFormat::graph6).graph == support::path_graph(4));
  CHECK(parse_graph("C~", GraphFormat::graph6).graph == support::complete_graph(4));
  CHECK(serialize_graph(support::cycle_graph(5), GraphFormat::graph6) == "Dhc\n");
  CHECK(serialize_graph(support::path_graph(4), GraphFormat::graph6) == "Ch\n");
  CHECK(parse_graph(">>graph6<<Dhc\n", GraphFormat::graph6).graph == support::cycle_graph(5));

  CHECK_THROWS_AS(parse_graph("D", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("Dhc ", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("", GraphFormat::graph6), ParseError);
}

TEST_CASE("graph6 long form covers more than 62 vertices") {
  std::mt19937_64 rng(55);
  Graph g = support::random_graph(70, 0.1, rng);
  std::string bytes = serialize_graph(g, GraphFormat::graph6);
  CHECK(bytes[0] == '~');
  CHECK(parse_graph(bytes, GraphFormat::graph6).graph == g);
}

TEST_CASE("dimacs basics") {
  ParsedInstance p = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::dimacs);
  CHECK(p.graph == support::path_graph(3));
  ParsedInstance with_k = parse_graph("p edge 4 1\nc k 2\ne 1 4\n", GraphFormat::dimacs);
  CHECK(with_k.k == 2);
  CHECK(with_k.graph.has_edge(0, 3));

  CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::dimacs), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 5\n", GraphFormat::dimacs), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge x 1\n", GraphFormat::dimacs), ParseError);
  CHECK_THROWS_AS(parse_graph("q edge 2 1\n", GraphFormat::dimacs), ParseError);
}

TEST_CASE("round trips hold on random graphs in all three formats") {
  std::mt19937_64 rng(56);
  for (int round = 0; round < 120; ++round) {
    int n = 1 + static_cast<int>(rng() % 50);
    Graph g = support::random_graph(n, 0.2, rng);
    for (GraphFormat fmt : {GraphFormat::edgelist, GraphFormat::graph6, GraphFormat::dimacs}) {
      std::string bytes = serialize_graph(g, fmt, 3);
      ParsedInstance back = parse_graph(bytes, fmt);
      CAPTURE(round, n, graph_format_name(fmt));
      REQUIRE(back.graph == g);
      if (fmt != GraphFormat::graph6) REQUIRE(back.k == 3);
      // canonical form: serialize(parse(serialize)) == serialize
      REQUIRE(serialize_graph(back.graph, fmt, back.k ? back.k : std::optional<int>{3}) == bytes);
    }
  }
}

TEST_CASE("serialization demands dense ids; renumbering provides them") {
  Graph sparse_ids = Graph::from_parts({2, 5, 9}, {{2, 5}});
  CHECK_THROWS_AS(serialize_graph(sparse_ids, GraphFormat::edgelist), std::invalid_argument);
  DenseRenumbering dense = renumber_dense(sparse_ids);
  CHECK(dense.graph.vertex_count() == 3);
  CHECK(dense.graph.has_edge(0, 1));
  CHECK(dense.mapping ==
        std::vector<std::pair<VertexId, int>>{{2, 0}, {5, 1}, {9, 2}});
  CHECK(serialize_graph(dense.graph, GraphFormat::edgelist) == "n=3\n0 1\n");
}

TEST_CASE("trace emission round-trips") {
  ReductionTrace trace;
  trace.steps.push_back(TraceStep{"lemma4", {7}, {}, {}, {}, 20, 19, 2, 2});
  trace.steps.push_back(TraceStep{"lemma6", {3, 4}, {}, {}, {}, 19, 17, 2, 1});
  trace.steps.push_back(TraceStep{"lemma5", {8, 9, 10}, {21, 22}, {5, 6}, {11}, 17, 16, 1, 1});
  std::string text = emit_trace(trace);
  CHECK(text.substr(0, 14) == "pivd-trace v1\n");
  TraceFile parsed = parse_trace(text);
  REQUIRE(parsed.trace.steps.size() == 3);
  CHECK(parsed.trace.steps[0].rule == "lemma4");
  CHECK(parsed.trace.steps[0].witness == VertexSet{7});
  CHECK(parsed.trace.steps[1].k_after == 1);
  CHECK(parsed.trace.steps[2].spliced_clique == VertexSet{21, 22});
  CHECK(parsed.trace.steps[2].attach_left == VertexSet{5, 6});
  CHECK(parsed.trace.steps[2].attach_right == VertexSet{11});
  CHECK(parsed.trace.steps[2].v_before == 17);

  CHECK(emit_trace(ReductionTrace{}) == "pivd-trace v1\n");
  CHECK(parse_trace("pivd-trace v1\n").trace.steps.empty());
  CHECK_THROWS_AS(parse_trace("nonsense\n"), ParseError);
}

TEST_CASE("verdict and renumber lines round-trip") {
  KernelOutcome out;
  out.verdict = KernelVerdict::no;
  out.no_reason = "lemma3";
  out.final_k = 2;
  std::string text = emit_trace(out.trace) + format_verdict_line(out) +
                     format_renumber_line({{4, 0}, {9, 1}});
  TraceFile parsed = parse_trace(text);
  CHECK(parsed.verdict == "no");
  CHECK(parsed.no_reason == "lemma3");
  CHECK(parsed.final_k == 2);
  CHECK(parsed.renumber == std::vector<std::pair<VertexId, int>>{{4, 0}, {9, 1}});
}

TEST_CASE("generated instances are deterministic and honest about k") {
  Instance a = generate_instance(50, 2, 1234);
  Instance b = generate_instance(50, 2, 1234);
  CHECK(a.graph == b.graph);
  CHECK(a.k == b.k);
  Instance c = generate_instance(50, 2, 1235);
  CHECK_FALSE(a.graph == c.graph);

  // k_noise = 0 gives a proper interval graph
  std::mt19937_64 rng(57);
  for (int round = 0; round < 30; ++round)
    CHECK(is_proper_interval(generate_instance(2 + static_cast<int>(rng() % 40), 0, rng()).graph));

  // deleting the noise vertices certifies the instance is YES
  for (int round = 0; round < 10; ++round) {
    Instance inst = generate_instance(30, 2, rng());
    VertexSet noise{30, 31};
    CHECK(is_proper_interval(delete_vertices(inst.graph, noise)));
  }
}
