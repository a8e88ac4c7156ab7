/* Compiles as plain C: verifies the public header is C-clean and the ABI
 * basics work without any C++ runtime in the client. */

#include <stdio.h>
#include <string.h>

#include "peerdeg.h"

static int failures = 0;

#define EXPECT(cond, msg)                             \
  do {                                                \
    if (!(cond)) {                                    \
      fprintf(stderr, "[FAIL] %s\n", msg);            \
      ++failures;                                     \
    }                                                 \
  } while (0)

int main(void) {
  EXPECT(strlen(peerdeg_version()) > 0, "version string");
  EXPECT(peerdeg_validate_rates(0.5, 0.01, 0) == PEERDEG_OK, "valid rates");
  EXPECT(peerdeg_validate_rates(0.0, 0.01, 0) == PEERDEG_E_NON_POSITIVE_RATE,
         "zero alpha rejected in analytic context");

  double d01 = 0.0;
  EXPECT(peerdeg_conditional_degree_prob(0, 1, 0.1, 0.2, &d01) == PEERDEG_OK, "D01 status");
  EXPECT(d01 > 0.66 && d01 < 0.67, "D01 value");

  uint64_t n = 0;
  EXPECT(peerdeg_aiello_network_size(5.0, 0.9, 10000000, &n) == PEERDEG_OK, "aiello status");
  EXPECT(n == 1079, "aiello size");

  peerdeg_dist* dist = NULL;
  peerdeg_hist* hist = NULL;
  EXPECT(peerdeg_dist_fixed(4, &dist) == PEERDEG_OK, "dist create");
  EXPECT(peerdeg_analytic_distribution(dist, 0.3, 0.1, 1e-12, &hist) == PEERDEG_OK,
         "analytic distribution");
  EXPECT(peerdeg_hist_size(hist) == 5, "histogram size");
  peerdeg_hist_free(hist);
  peerdeg_dist_free(dist);

  if (failures == 0) printf("c smoke: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
