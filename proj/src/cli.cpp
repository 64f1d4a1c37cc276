// SPDX-License-Identifier: Apache-2.0

#include "ncreal/cli.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncreal/algebra.hpp"
#include "ncreal/errors.hpp"
#include "ncreal/json_io.hpp"
#include "ncreal/report.hpp"
#include "ncreal/synthesis.hpp"

namespace ncreal::cli
{

namespace
{

using json_io::Json;

constexpr long kDefaultMaxDim = 1024;

struct Options
{
  std::uint64_t seed = 0;
  int degree_bound = 2;
  std::optional<double> tol;
  std::string out;
  int samples = 200;
  std::string delta_path;
  std::array<std::string, 3> files;
  std::string demo;
};

// Exit code travelling with a finished report.
struct Outcome
{
  RunReport report;
  int code = kOk;
};

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

long max_dim()
{
  const char *env = std::getenv("NCREAL_MAX_DIM");
  if (env == nullptr || *env == '\0')
  {
    return kDefaultMaxDim;
  }
  char *end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1)
  {
    throw InputError(std::string("NCREAL_MAX_DIM must be a positive integer, got \"") + env +
                     "\"");
  }
  return v;
}

void check_dim(long size, const std::string &what)
{
  const long cap = max_dim();
  if (size > cap)
  {
    throw InputError(what + " size " + std::to_string(size) + " exceeds NCREAL_MAX_DIM = " +
                     std::to_string(cap));
  }
}

long delta_width(const DeltaMatrix &delta)
{
  return std::max(delta.rows(), delta.cols());
}

class Inputs
{
public:
  Json load(const std::string &path)
  {
    std::ifstream in(path);
    if (!in)
    {
      throw InputError(path + ": cannot open file");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    digest_.update(text);
    return json_io::parse(text, path);
  }

  void note(const std::string &s) { digest_.update(s); }
  std::string hex() const { return digest_.hex(); }

private:
  Digest digest_;
};

// Decode with the file name prefixed to field diagnostics.
template <typename F>
auto decode(const std::string &path, F &&fn)
{
  try
  {
    return fn();
  }
  catch (const InputError &e)
  {
    const std::string what = e.what();
    throw InputError(what.rfind(path, 0) == 0 ? what : path + ": " + what);
  }
}

Outcome cmd_member(const Options &opt, Inputs &in)
{
  const auto &f = opt.files;
  const DeltaMatrix delta =
      decode(f[0], [&] { return json_io::decode_delta(in.load(f[0])); });
  const MatrixTuple x = decode(f[1], [&] { return json_io::decode_tuple(in.load(f[1])); });
  check_dim(static_cast<long>(x.level()) * delta_width(delta), "member");
  const double tol = opt.tol.value_or(kMembershipTol);
  const auto r = membership(delta, x, tol);
  Outcome o;
  o.report.result = json_io::encode(r);
  o.report.check("membership_margin", r.margin, tol, r.member);
  o.code = r.member ? kOk : kDomainViolation;
  return o;
}

Outcome cmd_eval(const Options &opt, Inputs &in)
{
  const auto &f = opt.files;
  const Colligation c =
      decode(f[0], [&] { return json_io::decode_colligation(in.load(f[0])); });
  const MatrixTuple x = decode(f[1], [&] { return json_io::decode_tuple(in.load(f[1])); });
  check_dim(static_cast<long>(x.level()) * std::max(1, c.model_dim()) * delta_width(c.delta()),
            "eval");
  const auto r = membership(c.delta(), x);
  if (!r.member)
  {
    throw DomainError("outside polyhedron: ||delta(x)|| = " + sci(r.norm));
  }
  Outcome o;
  const Matrix value = eval_realization(c, x);
  o.report.result = Json{{"value", json_io::encode(value)}};
  o.report.check("membership_margin", r.margin, kMembershipTol, r.member);
  o.report.check_at_most("isometry_residual", c.isometry_residual(), kIsometryTol);
  return o;
}

Matrix load_matrix(Inputs &in, const std::string &path)
{
  return decode(path, [&] {
    const Json j = in.load(path);
    return json_io::decode_matrix(j.is_object() && j.contains("matrix") ? j["matrix"] : j);
  });
}

Outcome cmd_separate(const Options &opt, Inputs &in)
{
  const auto &f = opt.files;
  const DeltaMatrix delta =
      decode(f[0], [&] { return json_io::decode_delta(in.load(f[0])); });
  const MatrixTuple z = decode(f[1], [&] { return json_io::decode_tuple(in.load(f[1])); });
  const Matrix w = load_matrix(in, f[2]);
  check_dim(static_cast<long>(z.level()) * z.level() * delta_width(delta), "separate");
  const SeparationCertificate cert = scaling_construct(delta, z, w);
  Outcome o;
  o.report.result = json_io::encode(cert);
  const double margin = opt.tol.value_or(kScalingMargin);
  const auto &res = cert.residuals;
  o.report.check("membership_margin", res.at("membership_margin"), margin,
                 res.at("membership_margin") >= margin);
  o.report.check("scaled_w_norm", res.at("scaled_w_norm"), 1.0 + margin,
                 res.at("scaled_w_norm") >= 1.0 + margin);
  o.report.check_at_most("lower_left_block", res.at("lower_left_block"), 1e-10);
  o.report.check_at_most("trace_on_algebra", res.at("trace_on_algebra"), 1e-10);
  o.report.check_at_most("v_perp_N", res.at("v_perp_N"), 1e-8);
  o.report.check_at_most("invariance", res.at("invariance"), 1e-8);
  o.code = o.report.all_passed() ? kOk : kInfeasible;
  return o;
}

Outcome cmd_realize(const Options &opt, Inputs &in)
{
  const auto &f = opt.files;
  const InterpolationProblem prob =
      decode(f[0], [&] { return json_io::decode_problem(in.load(f[0])); });
  const Colligation source =
      decode(f[1], [&] { return json_io::decode_colligation(in.load(f[1])); });
  for (const auto &x : prob.nodes)
  {
    check_dim(static_cast<long>(x.level()) * std::max(1, source.model_dim()) *
                  delta_width(source.delta()),
              "realize");
  }
  const Colligation out = interpolate_finite(prob, source);

  std::vector<Matrix> source_values;
  for (const auto &x : prob.nodes)
  {
    source_values.push_back(eval_realization(source, x));
  }
  const auto agreement = agreement_residuals(out, prob.nodes, source_values);
  const double tol = opt.tol.value_or(1e-7);
  Outcome o;
  Json residuals = Json::array();
  double worst = 0.0;
  for (double r : agreement)
  {
    residuals.push_back(r);
    worst = std::max(worst, r);
  }
  o.report.result = Json{{"colligation", json_io::encode(out)},
                         {"agreement_residuals", std::move(residuals)}};
  o.report.check_at_most("max_agreement_residual", worst, tol);
  o.report.check_at_most("isometry_residual", out.isometry_residual(), 1e-9);
  if (!prob.targets.empty())
  {
    double worst_target = 0.0;
    Json target_residuals = Json::array();
    for (double r : agreement_residuals(out, prob.nodes, prob.targets))
    {
      target_residuals.push_back(r);
      worst_target = std::max(worst_target, r);
    }
    o.report.result["target_residuals"] = std::move(target_residuals);
    o.report.check_at_most("max_target_residual", worst_target, tol);
  }
  o.code = o.report.all_passed() ? kOk : kInfeasible;
  return o;
}

Outcome cmd_verify_model(const Options &opt, Inputs &in)
{
  const auto &f = opt.files;
  const auto mf = decode(f[0], [&] { return json_io::decode_model(in.load(f[0])); });
  for (const auto &x : mf.model.points)
  {
    check_dim(static_cast<long>(x.level()) * std::max(1, mf.model.m) * delta_width(mf.delta),
              "verify-model");
  }
  const double residual = verify_model(mf.model, mf.delta);
  Outcome o;
  o.report.result = Json{{"points", mf.model.points.size()}, {"residual", residual}};
  o.report.check_at_most("model_residual", residual, opt.tol.value_or(1e-8));
  o.code = o.report.all_passed() ? kOk : kInfeasible;
  return o;
}

Outcome cmd_fit(const Options &opt, Inputs &in)
{
  const auto &f = opt.files;
  const MatrixTuple lambda =
      decode(f[0], [&] { return json_io::decode_tuple(in.load(f[0])); });
  const Matrix w = load_matrix(in, f[1]);
  in.note("degree_bound=" + std::to_string(opt.degree_bound));
  std::optional<DeltaMatrix> delta;
  if (!opt.delta_path.empty())
  {
    delta = decode(opt.delta_path,
                   [&] { return json_io::decode_delta(in.load(opt.delta_path)); });
    require_member(*delta, lambda);
    in.note("samples=" + std::to_string(opt.samples));
  }
  Outcome o;
  FreePoly p(lambda.dims());
  try
  {
    p = fit_polynomial(lambda, w, opt.degree_bound);
  }
  catch (const FitInfeasible &e)
  {
    o.report.result = Json{{"feasible", false}, {"saturated", e.saturated}, {"error", e.what()}};
    o.report.check_at_most("fit_residual", e.residual, kFitTol * (1.0 + w.norm()));
    o.code = kInfeasible;
    return o;
  }
  o.report.result = Json{{"feasible", true}, {"poly", json_io::encode(p)}};
  o.report.check_at_most("fit_residual", (poly_eval(p, lambda) - w).norm(),
                         kFitTol * (1.0 + w.norm()));
  if (delta)
  {
    // The ideal is cut at one degree above the fit so that it contains the relations that
    // reduce the fitted words.
    const IdealBasis ideal = ideal_basis(lambda, opt.degree_bound + 1);
    const auto cond = check_condition_ii(p, *delta, lambda, ideal, opt.samples, opt.seed);
    o.report.result["ideal_dim"] = ideal.dim();
    o.report.result["sampled_points"] = cond.points.size();
    o.report.check_at_most("condition_ii_max_norm", cond.max_norm,
                           1.0 + opt.tol.value_or(1e-6));
  }
  o.code = o.report.all_passed() ? kOk : kInfeasible;
  return o;
}

Outcome cmd_demo(const Options &opt, Inputs &)
{
  Outcome o;
  o.report = run_demo(opt.demo, opt.seed);
  o.code = o.report.all_passed() ? kOk : kInfeasible;
  return o;
}

void emit(const Json &doc, const Options &opt, std::ostream &out)
{
  if (opt.out.empty())
  {
    out << doc.dump(2) << "\n";
    return;
  }
  std::ofstream file(opt.out);
  if (!file)
  {
    throw InputError(opt.out + ": cannot write output file");
  }
  file << doc.dump(2) << "\n";
}

void summarize(const RunReport &r, std::ostream &err)
{
  for (const auto &[name, value] : r.residuals)
  {
    err << "  " << name << " = " << sci(value) << " (tol " << sci(r.tolerances.at(name))
        << ") " << (r.verdicts.at(name) ? "ok" : "FAIL") << "\n";
  }
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Bounded nc-functions on polynomial polyhedra: membership, realization "
               "evaluation, algebra separation and finite-set synthesis.",
               "ncreal"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for all randomness")->default_val(0);
  app.add_option("--degree-bound", opt.degree_bound, "Max word length for fitting")
      ->default_val(2)
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol-override", opt.tol, "Override the command's verdict tolerance");
  app.add_option("--out", opt.out, "Write the JSON report to this file");

  using Handler = Outcome (*)(const Options &, Inputs &);
  Handler handler = nullptr;
  std::string name;
  auto sub = [&](const char *cmd, const char *help, std::vector<const char *> args,
                 Handler h) {
    CLI::App *s = app.add_subcommand(cmd, help);
    s->fallthrough();
    for (std::size_t i = 0; i < args.size(); i++)
    {
      s->add_option(args[i], opt.files[i], args[i])->required();
    }
    s->callback([&, h, cmd] {
      handler = h;
      name = cmd;
    });
    return s;
  };
  sub("member", "Test ||delta(x)|| < 1", {"delta", "x"}, cmd_member);
  sub("eval", "Evaluate a realization at x", {"colligation", "x"}, cmd_eval);
  sub("separate", "Separate w from Alg(z) by a similarity scaling", {"delta", "z", "w"},
      cmd_separate);
  sub("realize", "Synthesize a realization agreeing with a source on finite nodes",
      {"problem", "source"}, cmd_realize);
  sub("verify-model", "Check the nc-model identity on finite model data", {"model"},
      cmd_verify_model);
  CLI::App *fit = sub("fit", "Fit p with p(lambda) = w", {"lambda", "w"}, cmd_fit);
  fit->add_option("--delta", opt.delta_path, "Polyhedron for the sampled sup-norm check");
  fit->add_option("--samples", opt.samples, "Samples for the sup-norm check")
      ->check(CLI::PositiveNumber);
  CLI::App *demo = app.add_subcommand("demo", "Run a reproducible scenario");
  demo->fallthrough();
  demo->add_option("name", opt.demo, "step1 | step2 | roundtrip | contractivity")->required();
  demo->callback([&] {
    handler = cmd_demo;
    name = "demo";
  });

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &e)
  {
    out << app.help();
    return kOk;
  }
  catch (const CLI::ParseError &e)
  {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  std::string message;
  Outcome outcome;
  try
  {
    Inputs inputs;
    outcome = handler(opt, inputs);
    if (outcome.report.command.empty())
    {
      outcome.report.command = name;
      outcome.report.seed = opt.seed;
      inputs.note(name);
      outcome.report.inputs_digest = inputs.hex();
    }
    code = outcome.code;
  }
  catch (const InputError &e)
  {
    code = kInputError;
    message = e.what();
  }
  catch (const DomainError &e)
  {
    code = kDomainViolation;
    message = e.what();
  }
  catch (const Error &e)
  {
    code = kInfeasible;
    message = e.what();
  }

  if (!message.empty())
  {
    err << "error: " << message << "\n";
    try
    {
      emit(Json{{"command", name}, {"error", message}, {"exit_code", code}}, opt, out);
    }
    catch (const InputError &)
    {
    }
    return code;
  }

  auto &report = outcome.report;
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << report.command << ": " << (code == kOk ? "ok" : "exit " + std::to_string(code))
      << "\n";
  summarize(report, err);
  try
  {
    emit(report.to_json(), opt, out);
  }
  catch (const InputError &e)
  {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return code;
}

}  // namespace ncreal::cli
