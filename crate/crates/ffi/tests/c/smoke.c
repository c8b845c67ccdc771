#include <stdio.h>
#include <string.h>
#include "rowmotion.h"

int main(void) {
    RmFamily *f = NULL;
    RmOrbits *o = NULL;
    uint64_t order = 0;
    size_t count = 0;
    if (rm_family_parse("product:2,3,4", &f) != RM_STATUS_OK) return 1;
    if (rm_orbits_compute(f, RM_ACTION_PRO, 1000, 1, &o) != RM_STATUS_OK) return 2;
    if (rm_orbits_order(o, &order) != RM_STATUS_OK || order != 8) return 3;
    if (rm_orbits_count(o, &count) != RM_STATUS_OK) return 4;
    rm_orbits_free(o);
    rm_family_free(f);
    if (rm_family_parse("nope", &f) != RM_STATUS_INVALID_ARGUMENT) return 5;
    if (rm_last_error() == NULL) return 6;
    printf("%s %zu\n", rm_version(), count);
    return 0;
}
