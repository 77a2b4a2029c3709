/* The public header must compile as plain C. */
#include <stdio.h>

#include "gsigma/gsigma.h"

int main(void) {
  gsig_verify_result v;
  gsig_status s = gsig_verify(NULL, 6, "0,2", &v);
  if (s != GSIG_OK) {
    fprintf(stderr, "%s: %s\n", gsig_status_name(s), gsig_last_error());
    return 1;
  }
  printf("r=%ld K=%ld/%ld\n", v.extract_r, v.curvature_num, v.curvature_den);
  return v.passed && v.extract_r == 22 ? 0 : 1;
}
