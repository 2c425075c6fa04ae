#include <doctest.h>

#include <cofilt/cofilt.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

namespace fs = std::filesystem;

TEST_CASE("version and error slot") {
  CHECK(std::string(cofilt_version()) == "1.0.0");
  cofilt_complex out{};
  CHECK(cofilt_parse_alpha("nope", &out) == COFILT_ERR_FORMAT);
  CHECK(std::strlen(cofilt_last_error()) > 0);
  CHECK(cofilt_parse_alpha("1+1i", &out) == COFILT_OK);
  CHECK(std::string(cofilt_last_error()).empty());
  CHECK(out.re == 1.0);
  CHECK(out.im == 1.0);
}

TEST_CASE("scalar functions") {
  cofilt_complex p{};
  CHECK(cofilt_principal_power({2, 0}, {1, 1}, &p) == COFILT_OK);
  CHECK(p.re == doctest::Approx(1.5384778027279442));
  CHECK(cofilt_principal_power({0, 0}, {-1, 0}, &p) == COFILT_ERR_DOMAIN);
  CHECK(cofilt_principal_power({2, 0}, {1, 1}, nullptr) == COFILT_ERR_INVALID_ARGUMENT);

  cofilt_complex b{};
  CHECK(cofilt_generalized_binomial({5, 0}, 2, &b) == COFILT_OK);
  CHECK(b.re == 10.0);

  char buf[32];
  size_t needed = 0;
  CHECK(cofilt_format_alpha({2, -3}, buf, sizeof buf, &needed) == COFILT_OK);
  CHECK(std::string(buf) == "2-3i");
  CHECK(needed == 4);
  CHECK(cofilt_format_alpha({2, -3}, buf, 4, &needed) == COFILT_ERR_BUFFER_TOO_SMALL);

  cofilt_kind k{};
  CHECK(cofilt_parse_kind("I", &k) == COFILT_OK);
  CHECK(k == COFILT_INTEGRAL);
  cofilt_boundary bd{};
  CHECK(cofilt_parse_boundary("zero", &bd) == COFILT_OK);
  CHECK(bd == COFILT_BOUNDARY_ZERO);
}

TEST_CASE("filters through handles") {
  cofilt_filter* f = nullptr;
  REQUIRE(cofilt_filter_spectral(COFILT_INTEGRAL, {2, 0}, 8, &f) == COFILT_OK);
  CHECK(cofilt_filter_length(f) == 8);
  std::vector<cofilt_complex> taps(8);
  CHECK(cofilt_filter_taps(f, taps.data(), 7) == COFILT_ERR_BUFFER_TOO_SMALL);
  CHECK(cofilt_filter_taps(f, taps.data(), taps.size()) == COFILT_OK);
  CHECK(taps[1].re == doctest::Approx(2.0));
  cofilt_kind kind{};
  cofilt_complex alpha{};
  cofilt_route route{};
  CHECK(cofilt_filter_info(f, &kind, &alpha, &route) == COFILT_OK);
  CHECK(kind == COFILT_INTEGRAL);
  CHECK(route == COFILT_ROUTE_SPECTRAL);
  CHECK(alpha.re == 2.0);
  cofilt_filter_destroy(f);

  cofilt_filter* g = nullptr;
  CHECK(cofilt_filter_folded(COFILT_DERIVATIVE, {-0.5, 0}, 8, 1e-10, 100000, &g) == COFILT_ERR_PRECONDITION);
  CHECK(g == nullptr);
  CHECK(std::string(cofilt_last_error()) == "series diverges");
  CHECK(cofilt_filter_folded(COFILT_DERIVATIVE, {0.5, 0.5}, 8, 1e-10, 100000, &g) == COFILT_OK);
  CHECK(cofilt_filter_info(g, nullptr, nullptr, &route) == COFILT_OK);
  CHECK(route == COFILT_ROUTE_FOLDED);
  cofilt_filter_destroy(g);

  cofilt_filter_destroy(nullptr);
  CHECK(cofilt_filter_length(nullptr) == 0);
}

TEST_CASE("filter dump file round trip") {
  const fs::path p = fs::temp_directory_path() / "cofilt_capi_filter.txt";
  cofilt_filter* f = nullptr;
  REQUIRE(cofilt_filter_spectral(COFILT_DERIVATIVE, {1, 1}, 7, &f) == COFILT_OK);
  REQUIRE(cofilt_filter_write(f, p.c_str()) == COFILT_OK);
  cofilt_filter* g = nullptr;
  REQUIRE(cofilt_filter_read(p.c_str(), &g) == COFILT_OK);
  std::vector<cofilt_complex> a(7), b(7);
  cofilt_filter_taps(f, a.data(), 7);
  cofilt_filter_taps(g, b.data(), 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(a[i].re == b[i].re);
    CHECK(a[i].im == b[i].im);
  }
  cofilt_filter_destroy(f);
  cofilt_filter_destroy(g);
  CHECK(cofilt_filter_read("/nonexistent/dir/x.txt", &g) == COFILT_ERR_IO);
}

TEST_CASE("kernels") {
  cofilt_filter* f = nullptr;
  REQUIRE(cofilt_filter_spectral(COFILT_INTEGRAL, {1, 1}, 49, &f) == COFILT_OK);
  const size_t dims[2] = {7, 7};
  cofilt_kernel* k = nullptr;
  REQUIRE(cofilt_kernel_place(f, dims, 2, &k) == COFILT_OK);
  CHECK(cofilt_kernel_rank(k) == 2);
  CHECK(cofilt_kernel_size(k) == 49);
  size_t ref[2] = {};
  CHECK(cofilt_kernel_reference(k, ref, 2) == COFILT_OK);
  CHECK(ref[0] == 3);
  CHECK(ref[1] == 3);
  const size_t bad[2] = {6, 7};
  cofilt_kernel* k2 = nullptr;
  CHECK(cofilt_kernel_place(f, bad, 2, &k2) == COFILT_ERR_INVALID_ARGUMENT);
  cofilt_kernel_destroy(k);
  cofilt_filter_destroy(f);

  cofilt_kernel* log = nullptr;
  CHECK(cofilt_kernel_log(7, 0.5, 2, &log) == COFILT_OK);
  CHECK(cofilt_kernel_size(log) == 49);
  cofilt_kernel_destroy(log);
  CHECK(cofilt_kernel_log(6, 0.5, 2, &log) == COFILT_ERR_PRECONDITION);
  CHECK(cofilt_kernel_gaussian(7, 1.0, 3, &log) == COFILT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("fields, convolution and decomposition") {
  const size_t dims[2] = {4, 5};
  std::vector<cofilt_complex> samples(20, cofilt_complex{10, 0});
  cofilt_field* x = nullptr;
  REQUIRE(cofilt_field_create(dims, 2, samples.data(), &x) == COFILT_OK);
  cofilt_filter* f = nullptr;
  REQUIRE(cofilt_filter_spectral(COFILT_INTEGRAL, {1, 1}, 9, &f) == COFILT_OK);
  const size_t kd[2] = {3, 3};
  cofilt_kernel* k = nullptr;
  REQUIRE(cofilt_kernel_place(f, kd, 2, &k) == COFILT_OK);
  cofilt_field* y = nullptr;
  REQUIRE(cofilt_field_convolve(x, k, COFILT_BOUNDARY_REPLICATE, &y) == COFILT_OK);
  CHECK(cofilt_field_size(y) == 20);
  std::vector<double> re(20), im(20), ang(20), mod(20);
  CHECK(cofilt_field_decompose(y, re.data(), im.data(), ang.data(), mod.data()) == COFILT_OK);
  cofilt_complex two_a{};
  cofilt_principal_power({2, 0}, {1, 1}, &two_a);
  for (size_t i = 0; i < 20; ++i) {
    CHECK(std::abs(re[i] - 10 * two_a.re) < 1e-8);
    CHECK(std::abs(im[i] - 10 * two_a.im) < 1e-8);
  }

  cofilt_kernel* k1 = nullptr;
  REQUIRE(cofilt_kernel_recenter(f, &k1) == COFILT_OK);
  cofilt_field* z = nullptr;
  CHECK(cofilt_field_convolve(x, k1, COFILT_BOUNDARY_ZERO, &z) == COFILT_ERR_INVALID_ARGUMENT);

  const fs::path prefix = fs::temp_directory_path() / "cofilt_capi_planes";
  CHECK(cofilt_field_write_planes(y, prefix.c_str(), COFILT_PLANE_ANGLE | COFILT_PLANE_MOD) == COFILT_OK);
  CHECK(fs::exists(prefix.string() + "_angle.png"));
  CHECK(fs::exists(prefix.string() + "_mod.png"));

  const fs::path cfd = fs::temp_directory_path() / "cofilt_capi.cfd";
  CHECK(cofilt_field_write_cfd(y, cfd.c_str()) == COFILT_OK);
  cofilt_field* back = nullptr;
  REQUIRE(cofilt_field_read_cfd(cfd.c_str(), &back) == COFILT_OK);
  size_t bd[2] = {};
  CHECK(cofilt_field_dims(back, bd, 2) == COFILT_OK);
  CHECK(bd[0] == 4);
  CHECK(bd[1] == 5);

  cofilt_field* img = nullptr;
  REQUIRE(cofilt_field_read_image((prefix.string() + "_mod.png").c_str(), &img) == COFILT_OK);
  CHECK(cofilt_field_rank(img) == 2);

  for (auto* h : {x, y, back, img}) cofilt_field_destroy(h);
  cofilt_kernel_destroy(k);
  cofilt_kernel_destroy(k1);
  cofilt_filter_destroy(f);
}

TEST_CASE("synthetic signal and pearson") {
  cofilt_field* s = nullptr;
  REQUIRE(cofilt_field_synth(&s) == COFILT_OK);
  CHECK(cofilt_field_rank(s) == 1);
  CHECK(cofilt_field_size(s) == 1000);
  std::vector<cofilt_complex> v(1000);
  CHECK(cofilt_field_samples(s, v.data(), v.size()) == COFILT_OK);
  CHECK(v[174].re == doctest::Approx(0.3));
  cofilt_field_destroy(s);

  const double a[3] = {1, 2, 3}, b[3] = {2, 4, 6};
  double r = 0;
  CHECK(cofilt_pearson(a, b, 3, &r) == COFILT_OK);
  CHECK(r == doctest::Approx(1.0));
}

TEST_CASE("checks through the C API") {
  cofilt_report r{};
  CHECK(cofilt_check_sums({1, 1}, 7, &r) == COFILT_OK);
  CHECK(r.passed == 1);
  CHECK(std::string(r.check_name) == "sums");
  CHECK(std::string(r.line).rfind("PASS sums kind=both alpha=1+1i n=7 residual=", 0) == 0);
  CHECK(cofilt_check_integer_reduction(10, 8, &r) == COFILT_OK);
  CHECK(r.passed == 1);
  CHECK(cofilt_check_nullspace({-0.5, 1}, 8, &r) == COFILT_OK);
  CHECK(r.passed == 1);

  size_t count = 0;
  CHECK(cofilt_verify_default(nullptr, 0, &count) == COFILT_OK);
  CHECK(count > 300);
  std::vector<cofilt_report> all(count);
  CHECK(cofilt_verify_default(all.data(), 1, &count) == COFILT_ERR_BUFFER_TOO_SMALL);
  CHECK(cofilt_verify_default(all.data(), all.size(), &count) == COFILT_OK);
  for (const auto& rep : all) CHECK_MESSAGE(rep.passed == 1, rep.line);
}
