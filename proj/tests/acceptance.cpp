// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "qtp/cli.hpp"
#include "qtp/construct.hpp"
#include "qtp/elimination.hpp"
#include "qtp/errors.hpp"
#include "qtp/io.hpp"
#include "qtp/qep.hpp"
#include "support.hpp"

using namespace qtp;
using qtp::test::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

Matrix e1_times_row(const QuadPoly2P& q) {
  Matrix out(3 * q.n(), 6 * q.n());
  out.paste(0, 0, q.coefficient_row());
  return out;
}

bool constant_nonzero(const BiPoly& p) { return p.is_constant() && !p.is_zero(); }

bool certificate_holds(const LinearizationCertificate& c, const Pencil2P& l, const QuadPoly2P& q) {
  if (!c.verified || !c.e || !c.f) return false;
  PolyMatrix target = test::block_diag(q.to_poly(), to_poly(Matrix::identity(2 * q.n())));
  if (*c.f * l.to_poly() * *c.e != target) return false;
  return constant_nonzero(det(*c.e)) && constant_nonzero(det(*c.f));
}

FreeBlocks alpha_e1_blocks(Rng& rng, std::size_t n) {
  for (;;) {
    FreeBlocks b = rng.blocks(n);
    b.y1.paste(n, 0, Matrix(2 * n, n));
    if (!det(condition_matrix(Matrix::identity(3), b.z1, b.z2)).is_zero()) return b;
  }
}

AnsatzVector admissible(Rng& rng, AppendixCase which) {
  auto nz = [&] { return rng.nonzero_scalar(); };
  switch (which) {
    case AppendixCase::AllNonzero: return {{nz(), nz(), nz()}};
    case AppendixCase::AZero: return {{0, nz(), nz()}};
    case AppendixCase::ABZero: return {{0, 0, nz()}};
    case AppendixCase::BZero:
    case AppendixCase::BZeroAlt: return {{nz(), 0, nz()}};
    case AppendixCase::BCZero: return {{nz(), 0, 0}};
    case AppendixCase::CZero: return {{nz(), nz(), 0}};
    case AppendixCase::ACZero: return {{0, nz(), 0}};
  }
  return {};
}

QuadPoly2P random_scalar_quad(Rng& rng) {
  std::array<Matrix, 6> a;
  for (auto& m : a) m = Matrix{{rng.integer(-4, 4)}};
  a[0] = Matrix{{rng.integer(1, 4)}};
  return QuadPoly2P(a);
}

Outcome criterion1() {
  Outcome o;
  Rng rng(1001);
  for (int t = 0; t < 20; ++t) {
    QuadPoly2P q = rng.quad(1 + t % 3);
    Pencil2P l = standard_linearization(q);
    PolyMatrix expected = test::expand_ansatz_q(AnsatzVector::e1(), q);
    require(o, apply_to_lambda(l) == expected, "apply_to_lambda differs, instance " + std::to_string(t));
    require(o, test::expand_times_lambda(l) == expected, "hand expansion differs, instance " + std::to_string(t));
  }
  o.detail = o.pass ? "20 random Q, n in {1,2,3}, exact" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  Rng rng(1001);  // same instances as criterion 1
  for (int t = 0; t < 20; ++t) {
    QuadPoly2P q = rng.quad(1 + t % 3);
    require(o, box_add(standard_linearization(q)) == e1_times_row(q), "box_add differs, instance " + std::to_string(t));
  }
  o.detail = o.pass ? "20 random Q, exact" : o.detail;
  return o;
}

Outcome criterion3() {
  Outcome o;
  QuadPoly2P q = io::read_problem(test::data_path("example_n2.json"));
  Pencil2P worked = io::read_pencil(test::data_path("example_n2_pencil.json"));
  require(o, worked == test::worked_pencil(q), "corpus pencil differs from the block formula");
  auto m = membership(worked, q);
  require(o, m.is_member() && m.v == AnsatzVector{{1, 1, 2}}, "membership did not return (1, 1, 2)");
  require(o, generate_member(q, AnsatzVector{{1, 1, 2}}, test::worked_blocks(q)) == worked,
          "generate_member with the worked blocks differs entry-wise");
  Rng rng(1003);
  for (int t = 0; t < 5; ++t) {
    QuadPoly2P r = rng.quad(1 + t % 3);
    auto mr = membership(test::worked_pencil(r), r);
    require(o, mr.is_member() && mr.v == AnsatzVector{{1, 1, 2}}, "random-Q worked pencil not (1, 1, 2)");
    require(o, generate_member(r, AnsatzVector{{1, 1, 2}}, test::worked_blocks(r)) == test::worked_pencil(r),
            "random-Q generate_member differs");
  }
  o.detail = o.pass ? "v = (1, 1, 2); generated pencil equal entry for entry" : o.detail;
  return o;
}

Outcome criterion4() {
  Outcome o;
  Rng rng(1004);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng.integer(0, 2);
    QuadPoly2P q = rng.quad(n);
    AnsatzVector v = rng.ansatz();
    auto r = membership(generate_member(q, v, rng.blocks(n)), q);
    require(o, r.is_member() && r.v == v, "round trip failed at instance " + std::to_string(t));
  }
  o.detail = o.pass ? "100 random (Q, v, blocks), n <= 3, exact" : o.detail;
  return o;
}

Outcome criterion5() {
  Outcome o;
  Rng rng(1005);
  QuadPoly2P q1 = rng.quad(1), q2 = rng.quad(2);
  auto d1 = space_dimension(q1), d2 = space_dimension(q2);
  require(o, d1.dimension == 12 && d1.verified && d1.witness_rank == 12, "n=1 dimension/witness wrong");
  require(o, d2.dimension == 39 && d2.verified && d2.witness_rank == 39, "n=2 dimension/witness wrong");
  auto oracle = test::brute_force_constraints(q1);
  require(o, oracle.unknowns - oracle.rank == 12, "brute-force n=1 oracle gives " +
                                                       std::to_string(oracle.unknowns - oracle.rank));
  if (o.pass) {
    o.detail = "n=1: 12 (oracle " + std::to_string(oracle.unknowns) + " unknowns - rank " +
               std::to_string(oracle.rank) + "), n=2: 39, witness ranks verified";
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(1006);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 1 + t % 2;
    QuadPoly2P q = rng.quad(n);
    auto alpha = rng.nonzero_scalar();
    Pencil2P l = generate_member(q, AnsatzVector::e1(alpha), alpha_e1_blocks(rng, n));
    auto c = build_certificate_alpha_e1(l, q, alpha);
    require(o, certificate_holds(c, l, q), "F L E != diag(Q, I) at instance " + std::to_string(t));
  }
  o.detail = o.pass ? "20 random alpha e1 members: F L E = diag(Q, I), det E, det F nonzero constants" : o.detail;
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(1007);
  int max_redraws = 0, runs = 0;
  for (AppendixCase which : kAppendixCases) {
    for (int t = 0; t < 3; ++t) {
      AnsatzVector v = admissible(rng, which);
      auto alpha = rng.nonzero_scalar();
      auto tr = appendix_transform(which, v, alpha);
      require(o, tr.m * v.column() == AnsatzVector::e1(alpha).column(),
              std::string("M v != alpha e1 for ") + std::string(case_label(which)));
      require(o, !test::cofactor_det(tr.m).is_zero(), std::string("det M = 0 for ") + std::string(case_label(which)));

      std::size_t n = 1 + t % 2;
      QuadPoly2P q = rng.quad(n);
      ProcedureOptions opts;
      opts.seed = 7000 + runs;
      opts.prefer_alternate_case = which == AppendixCase::BZeroAlt;
      auto r = procedure_linearize(q, v, alpha, rng.blocks(n), opts);
      ++runs;
      max_redraws = std::max(max_redraws, r.redraws);
      require(o, r.transform.tag == which, std::string("procedure picked another case for ") +
                                               std::string(case_label(which)));
      require(o, r.redraws <= 32, "more than 32 re-draws");
      require(o, certificate_holds(r.certificate, r.transformed, q),
              std::string("procedure output not certified for ") + std::string(case_label(which)));
    }
  }
  if (o.pass) {
    o.detail = "8 cases x 3: M v = alpha e1, det M != 0, certified; max re-draws " + std::to_string(max_redraws);
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  Rng rng(1008);
  for (int t = 0; t < 20; ++t) {
    std::size_t n1 = 1 + rng.integer(0, 1), n2 = 1 + rng.integer(0, 1);
    QuadSystem2P sys{rng.quad(n1), rng.quad(n2)};
    auto lin = linearize_system(sys, rng.nonzero_scalar(), rng.nonzero_scalar(), alpha_e1_blocks(rng, n1),
                                alpha_e1_blocks(rng, n2));
    auto d = delta_operators(lin);
    require(o, det(d.delta0).is_zero(), "det Delta0 != 0 at instance " + std::to_string(t));
  }
  o.detail = o.pass ? "20 random systems, n1, n2 <= 2: det Delta0 = 0 exactly" : o.detail;
  return o;
}

Outcome criterion9() {
  Outcome o;
  SpectrumOptions opts{1e-8};
  QuadSystem2P cl = io::read_system(test::data_path("circle_line_system.json"));
  auto r = spectrum_quadratic(cl, opts);
  const double s = std::sqrt(0.5);
  bool ok = r.points.size() == 2 && r.bezout_bound == 4 && r.within_bound;
  if (ok) {
    ok = std::abs(r.points[0].lambda + s) < 1e-8 && std::abs(r.points[0].mu + s) < 1e-8 &&
         std::abs(r.points[1].lambda - s) < 1e-8 && std::abs(r.points[1].mu - s) < 1e-8;
  }
  require(o, ok, "circle/line spectrum wrong");

  Rng rng(1009);
  int systems = 0, attempts = 0;
  while (systems < 20 && attempts < 200) {
    ++attempts;
    QuadSystem2P sys{random_scalar_quad(rng), random_scalar_quad(rng)};
    SpectrumReport sq;
    try {
      sq = spectrum_quadratic(sys, opts);
    } catch (const NonGenericSystem&) {
      continue;
    }
    ++systems;
    require(o, sq.points.size() <= 4, "more than 4 points");
    auto lin = linearize_system(sys, rng.nonzero_scalar(), rng.nonzero_scalar(), alpha_e1_blocks(rng, 1),
                                alpha_e1_blocks(rng, 1));
    require(o, lin.cert1 && lin.cert1->verified && lin.cert2 && lin.cert2->verified, "linearization not certified");
    auto c = verify_spectral_equality(sys, lin, opts);
    require(o, c.equal, "sigma_Q != sigma_L for system " + std::to_string(systems));
  }
  require(o, systems == 20, "could not draw 20 generic systems");
  o.detail = o.pass ? "2 points at +-1/sqrt2 within 1e-8; 20 random systems: |sigma_Q| <= 4, sigma_Q = sigma_L"
                    : o.detail;
  return o;
}

Outcome criterion10() {
  Outcome o;
  QuadSystem2P sys = io::read_system(test::data_path("eigenpair_system.json"));
  auto lin = linearize_system_standard(sys);
  require(o, lin.cert1->verified && lin.cert2->verified, "linearization not certified");
  Matrix x1{{1}, {0}}, x2{{1}};
  require(o, (sys.q1.eval(1, 2) * x1).is_zero() && (sys.q2.eval(1, 2) * x2).is_zero(), "(1, 2) not an eigenvalue");
  auto r = verify_eigenpair(sys, lin, 1, 2, x1, x2);
  require(o, r.exact_zero && r.passed, "some residual is nonzero");
  o.detail = o.pass ? "(lambda, mu) = (1, 2): Q, L and both Delta residuals exactly 0" : o.detail;
  return o;
}

Outcome criterion11() {
  Outcome o;
  auto d = [](const char* f) { return test::data_path(f); };
  auto tmp = std::filesystem::temp_directory_path() / "qtp_acceptance";
  std::filesystem::create_directories(tmp);
  const std::string kernel_out = (tmp / "kernel.json").string();
  struct Cmd {
    std::vector<std::string> args;
    int expect;
  };
  const std::vector<Cmd> cmds = {
      {{"standard", "-q", d("unit_circle.json")}, 0},
      {{"member", "-q", d("example_n2.json"), "-l", d("example_n2_pencil.json")}, 0},
      {{"generate", "-q", d("example_n2.json"), "-v", "1,1,2", "--blocks", d("example_n2_blocks.json")}, 0},
      {{"kernel", "--blocks", d("example_n2_blocks.json"), "-o", kernel_out}, 0},
      {{"dimension", "-q", d("example_n2.json")}, 0},
      {{"procedure", "-q", d("example_n2.json"), "-v", "1,0,3", "--alpha", "1/2", "--seed", "7"}, 0},
      {{"certify", "-q", d("example_n2.json"), "-l", d("example_n2_pencil.json")}, 1},
      {{"qep-linearize", "-s", d("circle_line_system.json"), "--blocks1", d("unit_blocks.json"), "--alpha1", "2"}, 0},
      {{"delta", "-s", d("generic_system.json")}, 0},
      {{"spectrum", "-s", d("circle_line_system.json")}, 0},
      {{"compare", "-s", d("generic_system.json")}, 0},
      {{"verify-pair", "-s", d("eigenpair_system.json"), "--lambda", "1", "--mu", "2", "--x1", "1,0", "--x2", "1"}, 0},
  };
  for (const auto& c : cmds) {
    std::ostringstream out, err;
    int code = run_cli(c.args, out, err);
    require(o, code == c.expect, c.args[0] + " exited " + std::to_string(code) + ": " + err.str());
  }
  std::ostringstream member_out, err;
  run_cli({"member", "-q", d("example_n2.json"), "-l", d("example_n2_pencil.json")}, member_out, err);
  require(o, member_out.str() == "v = (1, 1, 2)\n", "member output: " + member_out.str());

  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(QTP_DATA_DIR)) {
    const std::string text = io::read_text(entry.path());
    auto j = io::parse_json(text);
    std::string again = j.contains("Q1")             ? io::write_system(io::system_from_json(j))
                        : j.contains("coefficients") ? io::write_problem(io::problem_from_json(j))
                        : j.contains("A1hat")        ? io::write_pencil(io::pencil_from_json(j))
                                                     : io::write_blocks(io::blocks_from_json(j));
    require(o, again == text, "round trip changed " + entry.path().filename().string());
    ++files;
  }

  for (const char* seed : {"0", "3", "12345"}) {
    std::vector<std::string> args = {"procedure", "-q", d("example_n2.json"), "-v", "0,2,-1", "--seed", seed};
    std::ostringstream a, b, e;
    run_cli(args, a, e);
    run_cli(args, b, e);
    require(o, a.str() == b.str() && !a.str().empty(), std::string("seeded run differs for seed ") + seed);
  }
  if (o.pass) {
    o.detail = "12 subcommands ran; " + std::to_string(files) + " corpus files byte-identical; seeded runs identical";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"standard-linearization identity", criterion1},
      {"box-add of the standard linearization", criterion2},
      {"worked member and its free blocks", criterion3},
      {"membership round trip", criterion4},
      {"ansatz-space dimension", criterion5},
      {"alpha e1 unimodular certificate", criterion6},
      {"procedure and appendix transforms", criterion7},
      {"Delta0 singularity", criterion8},
      {"Bezout bound and spectral equality", criterion9},
      {"eigenpair and Delta coherence", criterion10},
      {"CLI round trip", criterion11},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s  %-40s %6.2fs  %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first, secs,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
