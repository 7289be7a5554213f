#ifndef PISO_DIAGRAM_IO_HPP
#define PISO_DIAGRAM_IO_HPP

#include <string>
#include <string_view>

#include "piso/coherence.hpp"

namespace piso {

// Diagram document format (JSON):
//   {
//     "nodes":   [{"id": "n0", "tree": "(S (S S))"},
//                 {"id": "n1", "tree": "untyped"}],
//     "edges":   [{"src": "n0", "dst": "n1", "term": "(tau S S S)"}],
//     "asserts": [[[0, 1], [2]]]
//   }
// Edge terms are S-expressions over the diagram toolkit; an assert pairs
// two edge-index paths, composed first-travelled-first.
Diagram load_diagram(std::string_view json_text);

std::string diagram_to_json(const Diagram& d);

}  // namespace piso

#endif  // PISO_DIAGRAM_IO_HPP
