#include "rsf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rsf/affine.hpp"
#include "rsf/json_io.hpp"
#include "rsf/lr.hpp"
#include "rsf/maya.hpp"
#include "rsf/reduce.hpp"
#include "rsf/schur.hpp"

namespace rsf::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string lambda, mu, nu;
    int r = 0;
    int n = -1;
    int max_size = kDefaultMaxSize;
    std::string format = "json";
    int jobs = 1;
    bool has_lambda = false;  // distinguishes --lambda "" from an absent flag
    bool has_nu = false;
};

std::string trim(const std::string& s) {
    auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos)
        return "";
    auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

Partition capped(const std::string& text, const char* flag) {
    Partition p;
    try {
        p = parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (p.size() > kSizeCap)
        throw UsageError(std::string(flag) + ": size " + std::to_string(p.size()) + " exceeds the cap of " +
                         std::to_string(kSizeCap));
    return p;
}

int require_r(const Options& o) {
    if (o.r < 2)
        throw UsageError("--r must be an integer >= 2");
    return o.r;
}

int require_bound(int value, const char* flag) {
    if (value < 0)
        throw UsageError(std::string(flag) + " is required and must be nonnegative");
    if (value > kSizeCap)
        throw UsageError(std::string(flag) + " " + std::to_string(value) + " exceeds the cap of " +
                         std::to_string(kSizeCap));
    return value;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string text(const Partition& p) { return p.empty() ? "()" : p.to_string(); }

int cmd_core_quotient(const Options& o, std::ostream& out) {
    const Partition lambda = capped(o.lambda, "--lambda");
    const CoreQuotient cq = r_decompose(lambda, require_r(o));
    if (o.format == "text") {
        out << "core      " << text(cq.core) << '\n';
        for (std::size_t k = 0; k < cq.quotient.size(); ++k)
            out << "quotient[" << k << "] " << text(cq.quotient[k]) << '\n';
        out << "sign      " << (cq.sign > 0 ? "+1" : "-1") << '\n';
    } else {
        emit(out, to_json(cq));
    }
    return kExitOk;
}

int emit_polynomial(const Options& o, std::ostream& out, const TPolynomial& p) {
    if (o.format == "text")
        out << p.to_string() << '\n';
    else
        emit(out, to_json(p));
    return kExitOk;
}

int cmd_schur(const Options& o, std::ostream& out) {
    return emit_polynomial(o, out, schur_in_t(capped(o.lambda, "--lambda")));
}

int cmd_reduce(const Options& o, std::ostream& out) {
    return emit_polynomial(o, out, reduced_schur(capped(o.lambda, "--lambda"), require_r(o)));
}

int cmd_lr(const Options& o, std::ostream& out) {
    const Partition lambda = capped(o.lambda, "--lambda");
    const Partition mu = capped(o.mu, "--mu");
    if (lambda.size() + mu.size() > kSizeCap)
        throw UsageError("|lambda| + |mu| exceeds the cap of " + std::to_string(kSizeCap));
    if (o.has_nu) {
        const Partition nu = capped(o.nu, "--nu");
        const auto c = lr_coefficient(nu, lambda, mu);
        if (o.format == "text")
            out << "c^" << text(nu) << "_{" << text(lambda) << " " << text(mu) << "} = " << c << '\n';
        else
            emit(out, Json{{"nu", to_json(nu)}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"coeff", c}});
        return kExitOk;
    }
    const auto terms = schur_product_expand(lambda, mu);
    if (o.format == "text") {
        for (const auto& [nu, c] : terms)
            out << std::setw(4) << c << "  " << text(nu) << '\n';
    } else {
        Json arr = Json::array();
        for (const auto& [nu, c] : terms)
            arr.push_back(Json{{"nu", to_json(nu)}, {"coeff", c}});
        emit(out, Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"terms", arr}});
    }
    return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    const Decomposition d = decompose(capped(o.lambda, "--lambda"), require_r(o));
    if (o.format == "text") {
        out << "S^(" << d.r << ")" << text(d.source) << " =\n";
        for (const auto& [mu, c] : d.terms)
            out << "  " << std::setw(4) << std::showpos << c << std::noshowpos << "  S^(" << d.r << ")" << text(mu)
                << '\n';
    } else {
        emit(out, to_json(d));
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const int r = require_r(o);
    std::vector<Partition> inputs;
    const bool single = o.has_lambda;
    int max_size = 0;
    if (single) {
        inputs.push_back(capped(o.lambda, "--lambda"));
    } else {
        max_size = require_bound(o.max_size, "--max-size");
        for (int n = 0; n <= max_size; ++n)
            for (auto& p : partitions_of(n))
                inputs.push_back(std::move(p));
    }
    if (o.jobs < 1)
        throw UsageError("--jobs must be >= 1");

    std::vector<TheoremCheck> results(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();)
            results[i] = verify_theorem(inputs[i], r);
    };
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < o.jobs; ++t)
            pool.emplace_back(worker);
        worker();
    }

    std::size_t passed = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (results[i].holds)
            ++passed;
        else
            failures.push_back(Json{{"lambda", to_json(inputs[i])}, {"difference", to_json(results[i].difference)}});
    }
    const bool ok = passed == inputs.size();

    if (o.format == "text") {
        if (single)
            out << "S^(" << r << ")" << text(inputs.front()) << ": " << (ok ? "identity holds" : "IDENTITY FAILS") << '\n';
        else
            out << "checked " << inputs.size() << " partitions of sizes 0.." << max_size << " with r=" << r << ": "
                << passed << " hold, " << failures.size() << " fail\n";
        for (std::size_t i = 0; i < inputs.size(); ++i)
            if (!results[i].holds)
                out << "  " << text(inputs[i]) << " difference: " << results[i].difference.to_string() << '\n';
    } else if (single) {
        emit(out, Json{{"r", r}, {"lambda", to_json(inputs.front())}, {"holds", ok},
                       {"difference", to_json(results.front().difference)}});
    } else {
        emit(out, Json{{"r", r}, {"max_size", max_size}, {"checked", inputs.size()}, {"passed", passed},
                       {"failures", failures}});
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_basic_set(const Options& o, std::ostream& out) {
    const int r = require_r(o);
    const int n = require_bound(o.n, "--n");
    const auto set = basic_set(r, n);
    if (o.format == "text") {
        for (const auto& p : set)
            out << text(p) << '\n';
    } else {
        Json arr = Json::array();
        for (const auto& p : set)
            arr.push_back(to_json(p));
        emit(out, Json{{"r", r}, {"n", n}, {"basic_set", arr}});
    }
    return kExitOk;
}

int cmd_weights(const Options& o, std::ostream& out) {
    const int r = require_r(o);
    const Partition lambda = capped(o.lambda, "--lambda");
    if (o.n < 0) {
        WeightLabel w;
        try {
            w = weight_of(lambda, r);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (o.format == "text")
            out << "Lambda" << text(w.core) << " - " << w.depth << " delta  (r=" << r << ")\n";
        else
            emit(out, to_json(w));
        return kExitOk;
    }
    // With --n, --lambda names the core and --n the depth.
    const WeightLabel w{r, lambda, require_bound(o.n, "--n")};
    if (!is_r_core(lambda, r))
        throw UsageError("--lambda " + text(lambda) + " is not an r-core");
    const auto basis = weight_basis(w);
    const auto mult = multiplicity_series(r, w.depth).back();
    if (o.format == "text") {
        out << "Lambda" << text(w.core) << " - " << w.depth << " delta  (r=" << r << "), multiplicity " << mult << '\n';
        for (const auto& p : basis)
            out << "  " << text(p) << '\n';
    } else {
        Json arr = Json::array();
        for (const auto& p : basis)
            arr.push_back(to_json(p));
        emit(out, Json{{"weight", to_json(w)}, {"multiplicity", mult}, {"basis", arr}});
    }
    return kExitOk;
}

int cmd_count_check(const Options& o, std::ostream& out) {
    const int r = require_r(o);
    const int max_n = o.n < 0 ? 10 : require_bound(o.n, "--n");
    const CountingReport counts = counting_report(r, max_n);
    std::vector<RankReport> ranks;
    bool ok = counts.ok;
    for (int n = 0; n <= max_n; ++n) {
        ranks.push_back(basis_rank_report(r, n));
        ok = ok && ranks.back().ok;
    }
    if (o.format == "text") {
        out << std::setw(3) << "n" << std::setw(8) << "basic" << std::setw(8) << "series" << std::setw(8) << "p^(r)"
            << std::setw(8) << "rank" << '\n';
        for (int n = 0; n <= max_n; ++n) {
            const auto i = static_cast<std::size_t>(n);
            out << std::setw(3) << n << std::setw(8) << counts.basic_set_counts[i] << std::setw(8) << counts.series[i]
                << std::setw(8) << counts.restricted_partitions[i] << std::setw(8) << ranks[i].rank << '\n';
        }
        out << (ok ? "ok" : "MISMATCH") << '\n';
    } else {
        Json rank_json = Json::array();
        for (const auto& rk : ranks)
            rank_json.push_back(rk.rank);
        emit(out, Json{{"r", r}, {"n", max_n}, {"basic_set_counts", counts.basic_set_counts},
                       {"series", counts.series}, {"restricted_partitions", counts.restricted_partitions},
                       {"basis_rank", rank_json}, {"ok", ok}});
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

Partition parse_partition(const std::string& raw) {
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw std::invalid_argument("unbalanced brackets in '" + raw + "'");
        s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) ||
                item.size() > 6)
                throw std::invalid_argument("malformed partition '" + raw + "'");
            parts.push_back(std::stoi(item));
        }
        if (!s.empty() && s.back() == ',')
            throw std::invalid_argument("malformed partition '" + raw + "'");
    }
    return Partition(std::move(parts));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reduced Schur functions, r-cores and r-quotients, Littlewood-Richardson coefficients", "rsf"};
    app.require_subcommand(1);
    Options o;

    auto add = [&](const std::string& name, const std::string& description) { return app.add_subcommand(name, description); };
    auto with_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        return sub;
    };
    auto with_lambda = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--lambda", o.lambda, "Partition, e.g. 3,1 or [3,1]; empty string or [] for the empty partition");
        if (required)
            opt->required();
        return sub;
    };
    auto with_r = [&](CLI::App* sub) {
        sub->add_option("--r", o.r, "Modulus r >= 2")->required();
        return sub;
    };

    auto* core_quotient = with_format(with_r(with_lambda(add("core-quotient", "r-core, r-quotient and r-sign"), true)));
    auto* schur = with_format(with_lambda(add("schur", "Schur function S_lambda(t)"), true));
    auto* reduce = with_format(with_r(with_lambda(add("reduce", "r-reduced Schur function"), true)));
    auto* lr = with_format(with_lambda(add("lr", "Littlewood-Richardson coefficient or product expansion"), true));
    lr->add_option("--mu", o.mu, "Second factor")->required();
    auto* nu_opt = lr->add_option("--nu", o.nu, "Outer shape; omit to expand the product");
    auto* decompose_cmd = with_format(with_r(with_lambda(add("decompose", "Expand S^(r)_lambda in the basic set"), true)));
    auto* verify = with_format(with_r(with_lambda(add("verify", "Check the basic-set expansion as a polynomial identity"), false)));
    auto* verify_lambda = verify->get_option("--lambda");
    verify->add_option("--max-size", o.max_size, "Check every partition of size <= this bound");
    verify->add_option("--jobs", o.jobs, "Worker threads");
    auto* basic = with_format(with_r(add("basic-set", "Partitions with empty 0-th quotient")));
    basic->add_option("--n", o.n, "Size")->required();
    auto* weights = with_format(with_r(with_lambda(add("weights", "Weight label, or weight-space basis with --n"), true)));
    weights->add_option("--n", o.n, "Depth; --lambda is then read as the core");
    auto* count = with_format(with_r(add("count-check", "Basic-set counts, generating function and rank")));
    count->add_option("--n", o.n, "Largest degree (default 10)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    o.has_lambda = verify_lambda->count() > 0;
    o.has_nu = nu_opt->count() > 0;

    try {
        if (core_quotient->parsed())
            return cmd_core_quotient(o, out);
        if (schur->parsed())
            return cmd_schur(o, out);
        if (reduce->parsed())
            return cmd_reduce(o, out);
        if (lr->parsed())
            return cmd_lr(o, out);
        if (decompose_cmd->parsed())
            return cmd_decompose(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (basic->parsed())
            return cmd_basic_set(o, out);
        if (weights->parsed())
            return cmd_weights(o, out);
        if (count->parsed())
            return cmd_count_check(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace rsf::cli
