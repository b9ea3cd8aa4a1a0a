#include <stdio.h>
#include <string.h>

#include "cubekit.h"

int main(void) {
  CubekitGraph *g = NULL;
  if (cubekit_graph_from_family("DO:3", &g) != CUBEKIT_STATUS_OK) return 1;
  if (cubekit_vertex_count(g) != 20 || cubekit_edge_count(g) != 30) return 2;
  if (cubekit_girth(g) != 6) return 3;

  bool pc = false;
  if (cubekit_is_partial_cube(g, &pc) != CUBEKIT_STATUS_OK || !pc) return 4;
  size_t idim = 0;
  if (cubekit_isometric_dimension(g, &idim) != CUBEKIT_STATUS_OK || idim != 5) return 5;

  CubekitClassification c;
  if (cubekit_classify(g, true, &c) != CUBEKIT_STATUS_OK) return 6;
  if (c.outcome != CUBEKIT_OUTCOME_DOUBLED_ODD || c.parameter != 3 || !c.certified) return 7;

  char *json = NULL;
  if (cubekit_classify_json(g, &json) != CUBEKIT_STATUS_OK) return 8;
  if (strstr(json, "\"outcome\": \"DOUBLED_ODD\"") == NULL) return 9;
  cubekit_string_free(json);
  cubekit_graph_free(g);

  CubekitGraph *bad = NULL;
  if (cubekit_graph_from_family("Q:99", &bad) != CUBEKIT_STATUS_PARSE) return 10;
  if (cubekit_last_error() == NULL) return 11;

  uint32_t square[8] = {0, 1, 1, 2, 2, 3, 3, 0};
  CubekitGraph *s = NULL;
  if (cubekit_graph_from_edges(square, 4, 4, &s) != CUBEKIT_STATUS_OK) return 12;
  if (cubekit_classify(s, false, &c) != CUBEKIT_STATUS_OK) return 13;
  if (c.outcome != CUBEKIT_OUTCOME_HYPERCUBE || c.parameter != 2) return 14;
  cubekit_graph_free(s);

  printf("c smoke ok\n");
  return 0;
}
