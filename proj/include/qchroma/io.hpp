#pragma once
#include <optional>
#include <string>

#include "qchroma/coloring.hpp"
#include "qchroma/graph.hpp"
#include "qchroma/qsym.hpp"

namespace qchroma {

// Graph literals: "m=3,2,3" (column encoding) or "e=1-2,2-3" (edge list; the
// vertex count is n when given, else the largest mentioned vertex; "e=" alone
// needs n). Malformed input throws std::invalid_argument; an edge list that
// is not an interval graph throws NotIntervalError from the interval parser.
SimpleGraph parse_simple_graph(const std::string& text, std::optional<int> n = {});
IntervalGraph parse_interval_graph(const std::string& text, std::optional<int> n = {});

// "31852647" (digits) or "3,1,8,5,2,6,4,7".
Word parse_word(const std::string& text);
std::string format_word(const Word& w);  // digits when all letters <= 9

// "(1^4,2,1^2)": runs of equal parts compressed exponentially.
std::string comp_exp_string(const Composition& a);

// "L_(2,1) + q^2 L_(1,2) + (1+2q+q^2) L_(1^3)"; the zero element is "0".
std::string qsym_text(const QSymElem& e);
// {"degree":n, "basis":"L", "terms":[{"comp":[1,2],"coeff":"1+q"}, ...]}.
std::string qsym_json(const QSymElem& e, int indent = 2);

std::string graph_json(const IntervalGraph& g);
// One "I_j = [lo, hi]" line per vertex.
std::string realization_text(const IntervalGraph& g);

}  // namespace qchroma
