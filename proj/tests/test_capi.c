/* Exercises the shared library through the C header only. */
#include <stdio.h>
#include <string.h>

#include "sheffer/sheffer.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond, \
              shf_last_error());                                    \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static void expect_string(char* s, const char* want) {
  EXPECT(s != NULL && strcmp(s, want) == 0);
  if (s && strcmp(s, want) != 0) fprintf(stderr, "  got %s\n  want %s\n", s, want);
  shf_string_free(s);
}

static void families(void) {
  char* out = NULL;
  EXPECT(shf_families_json(&out) == SHF_OK);
  EXPECT(out && strstr(out, "\"laguerre\"") && strstr(out, "\"miller-lee\""));
  shf_string_free(out);
}

static void laguerre(void) {
  const char* names[] = {"lambda"};
  const char* values[] = {"0"};
  shf_pair* pair = NULL;
  shf_sequence* seq = NULL;
  char* out = NULL;
  int flag = -1;
  size_t n;

  EXPECT(shf_pair_create("laguerre", names, values, 1, 6, &pair) == SHF_OK);
  EXPECT(shf_pair_order(pair) == 6);

  EXPECT(shf_sequence_generate(pair, SHF_KIND_SHEFFER_APPELL, 3, &seq) == SHF_OK);
  EXPECT(shf_sequence_length(seq) == 4);
  EXPECT(shf_sequence_poly_json(seq, 3, &out) == SHF_OK);
  expect_string(out, "[\"0\",\"-6\",\"6\",\"-1\"]");
  EXPECT(shf_sequence_poly_json(seq, 4, &out) == SHF_ERR_INVALID_ARGUMENT);
  EXPECT(shf_sequence_render(seq, SHF_FORMAT_CSV, &out) == SHF_OK);
  EXPECT(out && strncmp(out, "degree,index,coefficient\n", 25) == 0);
  shf_string_free(out);
  shf_sequence_free(seq);

  EXPECT(shf_sequence_generate(pair, SHF_KIND_SHEFFER, 7, &seq) == SHF_ERR_CONTRACT);

  EXPECT(shf_coefficients_json(pair, SHF_IDENTITY_DERIVATIVE_RECURRENCE, 2, &out) == SHF_OK);
  expect_string(out, "{\"a\":[\"-1\",\"2\",\"-2\"],\"b\":[\"-1\",\"1\",\"0\"],\"c\":[\"1\",\"-1\",\"0\"],"
                     "\"identity\":\"derivative-recurrence\"}");

  for (n = 0; n <= 5; ++n) {
    EXPECT(shf_residual(pair, SHF_IDENTITY_BINOMIAL_RECURRENCE, n, &out, &flag) == SHF_OK);
    EXPECT(flag == 1);
    expect_string(out, "[]");
  }
  EXPECT(shf_lemma_check(pair, 4, &flag) == SHF_OK && flag == 1);
  EXPECT(shf_convolution_check(pair, 5, &flag) == SHF_OK && flag == 1);
  EXPECT(shf_property_check(pair, SHF_PROPERTY_COMPOSITION, 4, &flag) == SHF_OK && flag == 1);
  EXPECT(shf_corollary_residual(pair, SHF_COROLLARY_DIFFERENTIAL, 2, &out, &flag) == SHF_ERR_INVALID_ARGUMENT);
  EXPECT(strstr(shf_last_error(), "l = 1") != NULL);
  shf_pair_free(pair);
}

static void explicit_pair(void) {
  const char* l[] = {"1", "0", "0", "0"};
  const char* h[] = {"0", "1", "-1/2", "1/3"};
  const char* bad_h[] = {"1", "1", "0", "0"};
  const char* bad_num[] = {"1", "x", "0", "0"};
  shf_pair* pair = NULL;
  char* out = NULL;
  int flag = -1;

  EXPECT(shf_pair_from_coefficients(l, h, 4, &pair) == SHF_OK);
  EXPECT(shf_corollary_residual(pair, SHF_COROLLARY_SCALED_DUPLICATE, 2, &out, &flag) == SHF_OK);
  EXPECT(flag == 1);
  shf_string_free(out);
  shf_pair_free(pair);

  pair = NULL;
  EXPECT(shf_pair_from_coefficients(l, bad_h, 4, &pair) == SHF_ERR_INVALID_ARGUMENT);
  EXPECT(pair == NULL);
  EXPECT(shf_pair_from_coefficients(bad_num, h, 4, &pair) == SHF_ERR_INVALID_ARGUMENT);
  EXPECT(shf_pair_from_coefficients(l, h, 0, &pair) != SHF_OK);
}

static void errors(void) {
  const char* names[] = {"m"};
  const char* values[] = {"1/0"};
  shf_pair* pair = NULL;
  char* out = NULL;
  EXPECT(shf_pair_create("nope", NULL, NULL, 0, 3, &pair) == SHF_ERR_UNKNOWN_FAMILY);
  EXPECT(strstr(shf_last_error(), "nope") != NULL);
  EXPECT(shf_pair_create("miller-lee", names, values, 1, 3, &pair) == SHF_ERR_INVALID_ARGUMENT);
  EXPECT(shf_pair_create("miller-lee", NULL, NULL, 0, 3, &pair) == SHF_ERR_INVALID_ARGUMENT);
  EXPECT(shf_audit_json(2, &out) == SHF_ERR_INVALID_ARGUMENT);
  EXPECT(shf_audit_json(3, &out) == SHF_OK);
  EXPECT(out && strstr(out, "\"identity-id\""));
  shf_string_free(out);
  shf_string_free(NULL);
  shf_pair_free(NULL);
  shf_sequence_free(NULL);
}

int main(void) {
  families();
  laguerre();
  explicit_pair();
  errors();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
