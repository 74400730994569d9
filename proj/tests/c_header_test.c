/*
 * Copyright 2026 The geomq Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Compiles the public header as strict C99 and runs one flow end to end. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>

#include "geomq/geomq.h"

#define EXPECT(cond)                                          \
  do {                                                        \
    if (!(cond)) {                                            \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                               \
    }                                                         \
  } while (0)

int main(void) {
  geomq_operator* op = NULL;
  geomq_trajectory* traj = NULL;
  geomq_flow_config cfg;
  const double seed[4] = {0.2, 0.3, 0.3, 0.88317608663278468};
  size_t rows = 0, width = 0;
  double* pts;
  double norm;

  EXPECT(geomq_operator_named("sigma3", &op) == GEOMQ_OK);
  geomq_flow_config_default(&cfg);
  cfg.t_max = 2.0;
  cfg.convergence_eps = 0.0;
  EXPECT(geomq_flow_integrate(op, GEOMQ_FIELD_PROJECTIVE_HAMILTONIAN, 2, seed, &cfg, &traj) == GEOMQ_OK);
  EXPECT(geomq_trajectory_shape(traj, &rows, &width) == GEOMQ_OK);
  EXPECT(rows == 2001 && width == 4);
  pts = malloc(rows * width * sizeof *pts);
  EXPECT(pts != NULL);
  EXPECT(geomq_trajectory_points(traj, pts) == GEOMQ_OK);
  /* |z1| is conserved by the σ3 flow. */
  norm = hypot(pts[(rows - 1) * width], pts[(rows - 1) * width + 1]);
  EXPECT(fabs(norm - hypot(0.2, 0.3)) < 1e-10);
  free(pts);
  geomq_trajectory_destroy(traj);
  geomq_operator_destroy(op);

  EXPECT(geomq_operator_named("bogus", &op) == GEOMQ_ERR_INVALID_ARGUMENT);
  EXPECT(geomq_last_error()[0] != '\0');
  puts("c header ok");
  return 0;
}
