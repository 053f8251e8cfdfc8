#include <stdio.h>
#include <string.h>

#include "ncmod.h"

int main(void) {
    NcmodAlgebra *h = NULL;
    if (ncmod_algebra_builtin("quaternion", &h) != NCMOD_STATUS_OK) {
        fprintf(stderr, "load: %s\n", ncmod_last_error());
        return 1;
    }
    char *k = NULL;
    if (ncmod_mul(h, "0,1,0,0", "0,0,1,0", &k) != NCMOD_STATUS_OK) {
        fprintf(stderr, "mul: %s\n", ncmod_last_error());
        return 1;
    }
    NcmodClassification c;
    ncmod_algebra_classify(h, &c);
    printf("dim %zu, i*j = %s, associative %d, center_dim %zu\n", ncmod_algebra_dim(h), k, c.associative,
           c.center_dim);
    int ok = strcmp(k, "0,0,0,1") == 0 && c.associative && !c.commutative;
    ncmod_string_free(k);

    NcmodAlgebra *bad = NULL;
    NcmodStatus s = ncmod_algebra_builtin("sedenion", &bad);
    printf("sedenion: status %d (%s)\n", (int)s, ncmod_last_error());
    ok = ok && s == NCMOD_STATUS_UNKNOWN_ALGEBRA && bad == NULL;

    ncmod_algebra_free(h);
    return ok ? 0 : 1;
}
