/* Copyright 2026 The Authors.
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

/* Compiled as plain C11: proves the public header is C-clean and the shared
 * library is usable without any C++ toolchain. */

#include <math.h>
#include <stdio.h>

#include "mobicache.h"

static int failures = 0;

static void expect(int condition, const char* what) {
  if (!condition) {
    fprintf(stderr, "FAIL: %s (last error: %s)\n", what, mc_last_error());
    ++failures;
  }
}

int main(void) {
  mc_synth_config config;
  mc_synth_config_init(&config);
  config.stations = 4;
  config.users = 5;
  config.contents = 8;
  config.slots = 6;
  config.grid_width = 2;
  config.grid_height = 2;
  config.seed = 3;

  mc_instance* instance = NULL;
  expect(mc_generate(&config, &instance) == MC_OK, "generate synthetic instance");
  if (instance == NULL) return 1;

  mc_instance* sized = NULL;
  expect(mc_instance_with_uniform_capacity(instance, 2, &sized) == MC_OK, "set capacity");

  mc_placement* placement = NULL;
  expect(mc_place(sized, MC_ALG_MOBICACHER, &placement) == MC_OK, "greedy placement");

  mc_report* report = NULL;
  expect(mc_evaluate(sized, placement, &report) == MC_OK, "evaluate placement");
  if (report != NULL) {
    const double gap = mc_report_utility(report) + mc_report_total_cost(report) -
                       mc_report_cost_constant(report);
    expect(fabs(gap) <= 1e-9 * mc_report_cost_constant(report), "cost identity");
    expect(mc_report_slots(report) == 6, "slot count");
  }

  mc_instance* broken = NULL;
  expect(mc_instance_parse("stations nope\n", &broken) == MC_ERR_PARSE,
         "parse error is reported");

  char* text = mc_placement_to_text(placement);
  expect(text != NULL, "placement serializes");
  mc_string_free(text);

  mc_report_free(report);
  mc_placement_free(placement);
  mc_instance_free(sized);
  mc_instance_free(instance);

  if (failures == 0) printf("capi smoke: ok\n");
  return failures == 0 ? 0 : 1;
}
