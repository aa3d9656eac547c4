#pragma once

#include <vector>

namespace lienil::detail {

// One theorem item: gates and predicates under the literal reading, and the
// corrected reading where it differs (nullptr means unchanged).
struct ItemRow {
    int id;
    const char* gate;
    const char* corrected_gate;
    const char* predicate;
    const char* corrected_predicate;
    const char* note;
    const char* citation;
};

const std::vector<ItemRow>& theorem_items();

}  // namespace lienil::detail
