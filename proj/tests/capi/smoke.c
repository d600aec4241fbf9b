#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
#include <zetacert/zetacert.h>

static int failed = 0;

#define EXPECT(c)                                           \
  do {                                                      \
    if (!(c)) {                                             \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #c); \
      failed = 1;                                           \
    }                                                       \
  } while (0)

int main(void) {
  double v = 0, y = 0, re = 0, im = 0, err = 0;
  int64_t s = 0;
  double rho = 0, theta = 0;

  EXPECT(strlen(zc_version()) > 0);
  EXPECT(zc_lambert_w0(M_E, &v) == ZC_OK && fabs(v - 1) < 1e-14);
  EXPECT(zc_lambert_w0(-1.0, &v) == ZC_ERR_DOMAIN);
  EXPECT(strlen(zc_last_error()) > 0);
  EXPECT(zc_lambert_w0(0.0, NULL) == ZC_ERR_INVALID_ARGUMENT);
  EXPECT(zc_constant_B(27.0, &v) == ZC_OK && fabs(v - 2) < 1e-14);
  EXPECT(zc_sup_g(&y, &v) == ZC_OK && fabs(y - 0.71) < 0.01);
  EXPECT(zc_certify_k(129, &s, &rho, &theta) == ZC_OK && rho <= 3.177207 && theta <= 2.40930);
  EXPECT(zc_certify_k(100, &s, &rho, &theta) == ZC_ERR_RANGE);
  EXPECT(zc_hurwitz_zeta(2, 0, 1, 1e-10, &re, &im, &err) == ZC_OK && fabs(re - M_PI * M_PI / 6) < 1e-12);
  EXPECT(zc_hurwitz_zeta(1, 0, 1, 1e-10, &re, &im, &err) == ZC_ERR_DOMAIN);
  EXPECT(zc_tyrina_x_of_y(50, 50, &v) == ZC_OK && fabs(v - 50) < 1e-9);
  EXPECT(zc_snt_bruteforce(10, 0, 256, &v) == ZC_OK && fabs(v - 11) < 1e-9);

  zc_session* ses = NULL;
  EXPECT(zc_session_create(&ses) == ZC_OK);
  EXPECT(zc_session_set_lambda_range(ses, 90, 80) == ZC_ERR_INVALID_ARGUMENT);
  EXPECT(zc_session_check_count(ses) == 0);
  EXPECT(zc_session_run(ses, "nope") == ZC_ERR_INVALID_ARGUMENT);
  EXPECT(zc_session_set_lambda_range(ses, 83, 84) == ZC_OK);
  EXPECT(zc_session_run(ses, "sweep") == ZC_ERR_RANGE);
  EXPECT(zc_session_run(ses, "constants") == ZC_OK);
  EXPECT(zc_session_check_count(ses) > 0);
  EXPECT(zc_session_failed_count(ses) == 0);
  zc_check c;
  EXPECT(zc_session_check(ses, 0, &c) == ZC_OK && c.passed && c.name != NULL);
  EXPECT(zc_session_check(ses, 100000, &c) == ZC_ERR_RANGE);
  char* text = NULL;
  EXPECT(zc_session_render(ses, ZC_FORMAT_JSON, &text) == ZC_OK && text && text[0] == '{');
  zc_free_string(text);
  zc_session_destroy(ses);

  if (!failed) printf("c api smoke ok\n");
  return failed;
}
