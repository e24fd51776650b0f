/* Minimal consumer of the platsq C ABI: build the degree-4 twisted family
 * system, count its dihedral colorings, and derive the plat-index bound.
 *
 *   cargo build -p platsq-ffi
 *   cc examples/color_count.c -Iinclude -L../../target/debug \
 *      -l:libplatsq_ffi.a -lpthread -ldl -lm -o color_count
 */
#include "platsq.h"

#include <assert.h>
#include <inttypes.h>
#include <stdio.h>

int main(void) {
    PlatsqBraidSystem *system = NULL;
    assert(platsq_system_family(2, 3, 0, &system) == PLATSQ_STATUS_OK);

    PlatsqQuandle *quandle = NULL;
    assert(platsq_quandle_dihedral(3, &quandle) == PLATSQ_STATUS_OK);

    uint64_t count = 0;
    assert(platsq_coloring_count(system, quandle, 0, &count) == PLATSQ_STATUS_OK);

    uint32_t bound = 0;
    assert(platsq_plat_lower_bound(count, 3, &bound) == PLATSQ_STATUS_OK);

    printf("colorings: %" PRIu64 ", plat index >= %" PRIu32 "\n", count, bound);

    char *text = NULL;
    assert(platsq_presentation_text(system, false, &text) == PLATSQ_STATUS_OK);
    printf("%s\n", text);
    platsq_string_free(text);

    platsq_quandle_free(quandle);
    platsq_system_free(system);
    return count == 9 && bound == 2 ? 0 : 1;
}
