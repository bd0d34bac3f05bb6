#include "qtp/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qtp/construct.hpp"
#include "qtp/elimination.hpp"
#include "qtp/errors.hpp"
#include "qtp/io.hpp"
#include "qtp/linearization_space.hpp"
#include "qtp/qep.hpp"
#include "qtp/roots.hpp"

namespace qtp {

namespace {

struct Options {
  std::string q, l, s, v, blocks, out;
  std::string alpha = "1";
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string lambda, mu, x1, x2;
  std::string alpha1 = "1", alpha2 = "1";
  std::string blocks1, blocks2, l1, l2;
};

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x + 0.0);
  return buf;
}

// Parts below roundoff relative to |z| print as 0.
std::string fmt_complex(std::complex<double> z) {
  const double floor = 1e-14 * std::max(1.0, std::abs(z));
  double re = std::abs(z.real()) < floor ? 0.0 : z.real() + 0.0;
  double im = std::abs(z.imag()) < floor ? 0.0 : z.imag() + 0.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
  return buf;
}

AnsatzVector parse_ansatz(const std::string& text) {
  auto values = io::parse_scalar_list(text);
  if (values.size() != 3) {
    throw ParseError("-v expects three comma-separated scalars, got " + std::to_string(values.size()));
  }
  return AnsatzVector{{values[0], values[1], values[2]}};
}

Matrix parse_vector(const std::string& text, std::size_t expected, const char* flag) {
  auto values = io::parse_scalar_list(text);
  if (values.size() != expected) {
    throw ParseError(std::string(flag) + " expects " + std::to_string(expected) + " scalars, got " +
                     std::to_string(values.size()));
  }
  return Matrix::column(values);
}

void emit_pencil(const Pencil2P& l, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << io::write_pencil(l);
  } else {
    io::write_text(path, io::write_pencil(l));
    out << "pencil written to " << path << "\n";
  }
}

void print_certificate(const LinearizationCertificate& c, std::ostream& out) {
  out << "certificate: " << kind_label(c.kind) << (c.verified ? " verified" : " NOT verified") << "\n";
  if (c.kind == CertificateKind::UnimodularPair) {
    if (c.det_e) out << "  det E = " << c.det_e->str() << "\n";
    if (c.det_f) out << "  det F = " << c.det_f->str() << "\n";
    out << "  max |F L E - diag(Q, I)| = " << fmt_double(c.residual) << "\n";
  } else if (c.gamma) {
    out << "  gamma = " << c.gamma->str() << "\n";
  }
  if (!c.note.empty()) out << "  note: " << c.note << "\n";
}

void print_points(const std::vector<SpectralPoint>& points, std::ostream& out) {
  for (const auto& p : points) {
    out << "  lambda = " << fmt_complex(p.lambda) << ", mu = " << fmt_complex(p.mu)
        << ", residual = " << fmt_double(p.residual) << "\n";
  }
}

void print_spectrum(const char* name, const SpectrumReport& r, std::ostream& out) {
  out << name << ": " << r.points.size() << " point(s), Bezout bound " << r.bezout_bound
      << (r.within_bound ? " respected" : " EXCEEDED") << "\n";
  print_points(r.points, out);
}

FreeBlocks blocks_or_standard(const std::string& path, const QuadPoly2P& q) {
  return path.empty() ? FreeBlocks::standard(q) : io::read_blocks(path);
}

LinearSystem2P system_linearization(const QuadSystem2P& sys, const Options& o) {
  if (!o.l1.empty() || !o.l2.empty()) {
    if (o.l1.empty() || o.l2.empty()) throw ParseError("--l1 and --l2 must be given together");
    LinearSystem2P lin{io::read_pencil(o.l1), io::read_pencil(o.l2), 1, 1, std::nullopt, std::nullopt};
    return lin;
  }
  if (o.blocks1.empty() && o.blocks2.empty() && o.alpha1 == "1" && o.alpha2 == "1") {
    return linearize_system_standard(sys);
  }
  return linearize_system(sys, GaussianRational::parse(o.alpha1), GaussianRational::parse(o.alpha2),
                          blocks_or_standard(o.blocks1, sys.q1), blocks_or_standard(o.blocks2, sys.q2));
}

int cmd_standard(const Options& o, std::ostream& out) {
  QuadPoly2P q = io::read_problem(o.q);
  emit_pencil(standard_linearization(q), o.out, out);
  auto cert = build_certificate_standard(q);
  print_certificate(cert, out);
  return cert.verified ? kExitOk : kExitNegative;
}

int cmd_member(const Options& o, std::ostream& out) {
  QuadPoly2P q = io::read_problem(o.q);
  Pencil2P l = io::read_pencil(o.l);
  auto r = membership(l, q);
  if (!r.is_member()) {
    out << "NOT-MEMBER\n";
    return kExitNegative;
  }
  out << "v = " << r.v.str() << (r.ambiguous ? "  (Q = 0: ansatz undetermined)" : "") << "\n";
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  QuadPoly2P q = io::read_problem(o.q);
  FreeBlocks b = o.blocks.empty() ? FreeBlocks::zero(q.n()) : io::read_blocks(o.blocks);
  emit_pencil(generate_member(q, parse_ansatz(o.v), b), o.out, out);
  return kExitOk;
}

int cmd_kernel(const Options& o, std::ostream& out) {
  FreeBlocks b = io::read_blocks(o.blocks);
  Pencil2P k = kernel_member(b);
  emit_pencil(k, o.out, out);
  bool annihilates = apply_to_lambda(k).is_zero();
  out << "L(Lambda (x) I) = 0: " << (annihilates ? "yes" : "no") << "\n";
  return annihilates ? kExitOk : kExitNegative;
}

int cmd_dimension(const Options& o, std::ostream& out) {
  QuadPoly2P q = io::read_problem(o.q);
  auto r = space_dimension(q);
  out << "dimension = " << r.dimension << "\n";
  out << "witness rank = " << r.witness_rank << " of " << r.parameter_count << " parameter directions"
      << (r.verified ? " (verified)" : " (MISMATCH)") << "\n";
  if (r.degenerate) out << "note: Q = 0, ansatz directions lie in the kernel\n";
  return r.verified ? kExitOk : kExitNegative;
}

int cmd_procedure(const Options& o, std::ostream& out) {
  QuadPoly2P q = io::read_problem(o.q);
  FreeBlocks b = o.blocks.empty() ? FreeBlocks::standard(q) : io::read_blocks(o.blocks);
  ProcedureOptions opts;
  opts.seed = o.seed;
  auto r = procedure_linearize(q, parse_ansatz(o.v), GaussianRational::parse(o.alpha), b, opts);
  out << "case: " << case_label(r.transform.tag) << "\n";
  out << "alpha = " << r.transform.alpha.str() << "\n";
  out << "M =\n" << to_string(r.transform.m) << "\n";
  out << "redraws = " << r.redraws << "\n";
  if (r.y11_forced_zero) out << "note: Y11 set to 0\n";
  if (r.y_lower_forced_zero) out << "note: Y21, Y31 set to 0\n";
  out << "transformed ansatz = " << r.transformed_ansatz.str() << "\n";
  emit_pencil(r.transformed, o.out, out);
  print_certificate(r.certificate, out);
  return r.certificate.verified ? kExitOk : kExitNegative;
}

int cmd_certify(const Options& o, std::ostream& out) {
  QuadPoly2P q = io::read_problem(o.q);
  Pencil2P l = io::read_pencil(o.l);
  auto m = membership(l, q);
  std::optional<LinearizationCertificate> cert;
  if (m.is_member() && !m.ambiguous && !m.v[0].is_zero() && m.v[1].is_zero() && m.v[2].is_zero()) {
    out << "member with ansatz " << m.v.str() << "\n";
    try {
      cert = build_certificate_alpha_e1(l, q, m.v[0]);
    } catch (const HypothesisViolated& e) {
      out << "unimodular pair unavailable: " << e.what() << "\n";
    }
  } else if (m.is_member()) {
    out << "member with ansatz " << m.v.str() << "\n";
  } else {
    out << "not a member of the ansatz space\n";
  }
  if (!cert) cert = certify_linearization(l, q);
  print_certificate(*cert, out);
  return cert->verified ? kExitOk : kExitNegative;
}

int cmd_qep_linearize(const Options& o, std::ostream& out) {
  QuadSystem2P sys = io::read_system(o.s);
  LinearSystem2P lin = system_linearization(sys, o);
  const std::string p1 = o.out.empty() ? "" : o.out + "1.json";
  const std::string p2 = o.out.empty() ? "" : o.out + "2.json";
  bool ok = true;
  out << "L1 (alpha = " << lin.alpha1.str() << "):\n";
  emit_pencil(lin.l1, p1, out);
  if (lin.cert1) {
    print_certificate(*lin.cert1, out);
    ok = ok && lin.cert1->verified;
  }
  out << "L2 (alpha = " << lin.alpha2.str() << "):\n";
  emit_pencil(lin.l2, p2, out);
  if (lin.cert2) {
    print_certificate(*lin.cert2, out);
    ok = ok && lin.cert2->verified;
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_delta(const Options& o, std::ostream& out) {
  QuadSystem2P sys = io::read_system(o.s);
  LinearSystem2P lin = system_linearization(sys, o);
  DeltaOps d = delta_operators(lin);
  auto r = singularity_check(d);
  out << "Delta0, Delta1, Delta2: " << d.delta0.rows() << "x" << d.delta0.cols() << "\n";
  out << "det Delta0 = " << r.det_delta0.str() << "\n";
  out << "singular: " << (r.singular ? "yes" : "no") << "\n";
  return r.singular ? kExitOk : kExitNegative;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  QuadSystem2P sys = io::read_system(o.s);
  SpectrumOptions opts{o.tol};
  auto r = spectrum_quadratic(sys, opts);
  out << "det Q1 = " << r.f.str() << "\n";
  out << "det Q2 = " << r.g.str() << "\n";
  print_spectrum("sigma_Q", r, out);
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  QuadSystem2P sys = io::read_system(o.s);
  LinearSystem2P lin = system_linearization(sys, o);
  auto c = verify_spectral_equality(sys, lin, SpectrumOptions{o.tol});
  print_spectrum("sigma_Q", c.spectrum_q, out);
  print_spectrum("sigma_L", c.spectrum_l, out);
  if (!c.unmatched_q.empty()) {
    out << "unmatched in sigma_Q:\n";
    print_points(c.unmatched_q, out);
  }
  if (!c.unmatched_l.empty()) {
    out << "unmatched in sigma_L:\n";
    print_points(c.unmatched_l, out);
  }
  out << "max match distance = " << fmt_double(c.max_match_distance) << "\n";
  out << (c.equal ? "spectra EQUAL" : "spectra DIFFER") << "\n";
  return c.equal ? kExitOk : kExitNegative;
}

int cmd_verify_pair(const Options& o, std::ostream& out) {
  QuadSystem2P sys = io::read_system(o.s);
  LinearSystem2P lin = system_linearization(sys, o);
  auto lambda = GaussianRational::parse(o.lambda);
  auto mu = GaussianRational::parse(o.mu);
  Matrix x1 = parse_vector(o.x1, sys.q1.n(), "--x1");
  Matrix x2 = parse_vector(o.x2, sys.q2.n(), "--x2");
  auto r = verify_eigenpair(sys, lin, lambda, mu, x1, x2, o.tol);
  out << "|Q1 x1| = " << fmt_double(r.q1_residual) << "\n";
  out << "|Q2 x2| = " << fmt_double(r.q2_residual) << "\n";
  out << "|L1 w1| = " << fmt_double(r.l1_residual) << "\n";
  out << "|L2 w2| = " << fmt_double(r.l2_residual) << "\n";
  out << "|Delta1 z - lambda Delta0 z| = " << fmt_double(r.delta1_residual) << "\n";
  out << "|Delta2 z - mu Delta0 z| = " << fmt_double(r.delta2_residual) << "\n";
  out << "exact zero: " << (r.exact_zero ? "yes" : "no") << "\n";
  out << (r.passed ? "eigenpair VERIFIED" : "eigenpair REJECTED") << "\n";
  return r.passed ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Linearizations of quadratic two-parameter eigenvalue problems", "qtp"};
  app.require_subcommand(1);

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&, fn] { action = [&, fn] { return fn(o, out); }; });
    return s;
  };
  auto lin_opts = [&](CLI::App* s) {
    s->add_option("--alpha1", o.alpha1, "scale of the first ansatz alpha1 e1");
    s->add_option("--alpha2", o.alpha2, "scale of the second ansatz alpha2 e1");
    s->add_option("--blocks1", o.blocks1, "free blocks for L1")->check(CLI::ExistingFile);
    s->add_option("--blocks2", o.blocks2, "free blocks for L2")->check(CLI::ExistingFile);
    s->add_option("--l1", o.l1, "explicit pencil file for L1")->check(CLI::ExistingFile);
    s->add_option("--l2", o.l2, "explicit pencil file for L2")->check(CLI::ExistingFile);
  };

  auto* s = sub("standard", "standard linearization", cmd_standard);
  s->add_option("-q", o.q, "problem file")->required()->check(CLI::ExistingFile);
  s->add_option("-o", o.out, "output pencil file");

  s = sub("member", "ansatz vector of a pencil", cmd_member);
  s->add_option("-q", o.q, "problem file")->required()->check(CLI::ExistingFile);
  s->add_option("-l", o.l, "pencil file")->required()->check(CLI::ExistingFile);

  s = sub("generate", "member with given ansatz and free blocks", cmd_generate);
  s->add_option("-q", o.q, "problem file")->required()->check(CLI::ExistingFile);
  s->add_option("-v", o.v, "ansatz vector a,b,c")->required();
  s->add_option("--blocks", o.blocks, "free blocks file (default zero)")->check(CLI::ExistingFile);
  s->add_option("-o", o.out, "output pencil file");

  s = sub("kernel", "kernel element from free blocks", cmd_kernel);
  s->add_option("--blocks", o.blocks, "free blocks file")->required()->check(CLI::ExistingFile);
  s->add_option("-o", o.out, "output pencil file");

  s = sub("dimension", "dimension of the ansatz space", cmd_dimension);
  s->add_option("-q", o.q, "problem file")->required()->check(CLI::ExistingFile);

  s = sub("procedure", "linearization from an arbitrary ansatz", cmd_procedure);
  s->add_option("-q", o.q, "problem file")->required()->check(CLI::ExistingFile);
  s->add_option("-v", o.v, "ansatz vector a,b,c")->required();
  s->add_option("--alpha", o.alpha, "target scale alpha");
  s->add_option("--seed", o.seed, "seed for Z re-draws");
  s->add_option("--blocks", o.blocks, "initial free blocks (default standard)")->check(CLI::ExistingFile);
  s->add_option("-o", o.out, "output pencil file");

  s = sub("certify", "certify a pencil as a linearization", cmd_certify);
  s->add_option("-q", o.q, "problem file")->required()->check(CLI::ExistingFile);
  s->add_option("-l", o.l, "pencil file")->required()->check(CLI::ExistingFile);

  s = sub("qep-linearize", "linearize both components of a system", cmd_qep_linearize);
  s->add_option("-s", o.s, "system file")->required()->check(CLI::ExistingFile);
  s->add_option("-o", o.out, "output prefix; writes <prefix>1.json and <prefix>2.json");
  lin_opts(s);

  s = sub("delta", "operator determinants of a linearized system", cmd_delta);
  s->add_option("-s", o.s, "system file")->required()->check(CLI::ExistingFile);
  lin_opts(s);

  s = sub("spectrum", "finite spectrum of a quadratic system", cmd_spectrum);
  s->add_option("-s", o.s, "system file")->required()->check(CLI::ExistingFile);
  s->add_option("--tol", o.tol, "residual tolerance");

  s = sub("compare", "compare spectra of a system and its linearization", cmd_compare);
  s->add_option("-s", o.s, "system file")->required()->check(CLI::ExistingFile);
  s->add_option("--tol", o.tol, "residual tolerance");
  lin_opts(s);

  s = sub("verify-pair", "check an exact eigenpair", cmd_verify_pair);
  s->add_option("-s", o.s, "system file")->required()->check(CLI::ExistingFile);
  s->add_option("--lambda", o.lambda, "eigenvalue lambda")->required();
  s->add_option("--mu", o.mu, "eigenvalue mu")->required();
  s->add_option("--x1", o.x1, "eigenvector of Q1, comma-separated")->required();
  s->add_option("--x2", o.x2, "eigenvector of Q2, comma-separated")->required();
  s->add_option("--tol", o.tol, "residual tolerance");
  lin_opts(s);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    return action();
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const NonGenericSystem& e) {
    err << "error: " << e.what() << "\n";
    return kExitNonGeneric;
  } catch (const ConditionUnsatisfiable& e) {
    err << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace qtp
