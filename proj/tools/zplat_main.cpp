// Command-line front end.  Everything goes through the C API in zplat.h; the
// CLI itself only handles argument parsing, file IO, worker scheduling, and
// golden-file comparison.

#include <zplat.h>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

int exit_code_for(zpl_status s) {
    switch (s) {
        case ZPL_OK: return 0;
        case ZPL_ERR_SYNTAX: return 2;
        case ZPL_ERR_VALIDATION:
        case ZPL_ERR_VERSION: return 3;
        case ZPL_ERR_CAP: return 4;
        case ZPL_ERR_INTERNAL: return 5;
        default: return 1;
    }
}

struct Options {
    bool strict = false;
    uint64_t seed = 1;
    uint64_t cap = 1ULL << 22;
    long jobs = 1;
    std::string golden_dir;
};

std::string take_string(char* s) {
    std::string out = s ? s : "";
    zpl_string_free(s);
    return out;
}

// Returns 0, or 6 on mismatch.  Missing golden files are created.
int check_golden(const Options& opt, const std::string& name, const std::string& text) {
    if (opt.golden_dir.empty()) return 0;
    namespace fs = std::filesystem;
    fs::path dir(opt.golden_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path file = dir / (name + ".txt");
    if (!fs::exists(file)) {
        std::ofstream out(file, std::ios::binary);
        out << text;
        std::cerr << "golden: recorded " << file.string() << "\n";
        return 0;
    }
    std::ifstream in(file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() == text) return 0;
    std::cerr << "golden: MISMATCH against " << file.string() << "\n";
    return 6;
}

std::string golden_name(const std::string& sub, const std::string& path) {
    std::string stem = std::filesystem::path(path).stem().string();
    for (char& c : stem)
        if (!isalnum(static_cast<unsigned char>(c))) c = '_';
    return sub + "-" + stem;
}

struct FileResult {
    zpl_status status = ZPL_OK;
    std::string text;
    std::string diag;
};

// Processes independent input files, possibly on several workers, and prints
// the reports in input order.
template <typename Fn>
int run_over_files(const Options& opt, const std::string& sub, const std::vector<std::string>& files,
                   Fn&& fn) {
    std::vector<FileResult> results(files.size());
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            std::size_t idx;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= files.size()) return;
                idx = next++;
            }
            FileResult& r = results[idx];
            std::ifstream in(files[idx], std::ios::binary);
            if (!in) {
                r.status = ZPL_ERR_BAD_ARGUMENT;
                r.diag = "cannot read " + files[idx];
                continue;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            zpl_lattice* lat = nullptr;
            char* diag = nullptr;
            r.status = zpl_lattice_parse(buf.str().c_str(), opt.strict ? 1 : 0, &lat, &diag);
            if (r.status != ZPL_OK) {
                r.diag = take_string(diag);
                continue;
            }
            char* out = nullptr;
            r.status = fn(lat, &out, &diag);
            if (r.status == ZPL_OK)
                r.text = take_string(out);
            else
                r.diag = take_string(diag);
            zpl_lattice_free(lat);
        }
    };
    long jobs = std::max<long>(1, opt.jobs);
    if (jobs == 1 || files.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (long t = 0; t < std::min<long>(jobs, static_cast<long>(files.size())); ++t)
            pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    int rc = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        const FileResult& r = results[i];
        if (r.status != ZPL_OK) {
            std::cerr << files[i] << ": " << zpl_status_name(r.status) << ": " << r.diag << "\n";
            if (rc == 0) rc = exit_code_for(r.status);
            continue;
        }
        std::cout << r.text;
        int g = check_golden(opt, golden_name(sub, files[i]), r.text);
        if (rc == 0) rc = g;
    }
    return rc;
}

int emit_single(const Options& opt, const std::string& golden, zpl_status status, char* out,
                char* diag) {
    if (status != ZPL_OK && out == nullptr) {
        std::cerr << zpl_status_name(status) << ": " << take_string(diag) << "\n";
        return exit_code_for(status);
    }
    std::string text = take_string(out);
    std::cout << text;
    int rc = 0;
    if (status != ZPL_OK) {
        std::cerr << zpl_status_name(status) << ": " << take_string(diag) << "\n";
        rc = exit_code_for(status);
    } else {
        zpl_string_free(diag);
    }
    int g = check_golden(opt, golden, text);
    return rc != 0 ? rc : g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Tate cohomology, diagrams, and counting bounds for lattices over cyclic "
                 "p-groups"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--strict", opt.strict, "reject unknown fields in input documents");
    app.add_option("--seed", opt.seed, "seed for the seeded random fixtures");
    app.add_option("--cap", opt.cap, "size cap for searches and enumeration");
    app.add_option("--jobs", opt.jobs, "worker count for batches of input files");
    app.add_option("--golden", opt.golden_dir, "directory of golden reports to record/compare");

    std::vector<std::string> files;
    long level = 1, group_level = 1;
    std::string reference;
    long ext_p = 3;
    bool modp2 = false;
    long en_p = 3;
    std::string ranks_str = "1,1";
    std::string formula, params;

    CLI::App* c_coh = app.add_subcommand("cohomology", "H^1 and Hhat^0 at one subgroup level");
    c_coh->add_option("file", files, "lattice file(s)")->required()->expected(-1);
    c_coh->add_option("--level", level, "subgroup level i (1..n)")->required();

    CLI::App* c_diag = app.add_subcommand("diagram", "full pipeline report with the diagram");
    c_diag->add_option("file", files, "lattice file(s)")->required()->expected(-1);

    CLI::App* c_dec = app.add_subcommand("decompose", "decomposition statistics at a group level");
    c_dec->add_option("file", files, "lattice file(s)")->required()->expected(-1);
    c_dec->add_option("--group-level", group_level, "subgroup level i (1..n)")->required();
    c_dec->add_option("--reference", reference,
                      "comma-separated reference character profile m_0,...,m_n");

    CLI::App* c_ext = app.add_subcommand("ext", "Hom/Ext tables for the block modules");
    c_ext->add_option("--p", ext_p, "odd prime")->required();
    c_ext->add_flag("--modp2", modp2, "include the tables over Z/p^2 coefficients");

    CLI::App* c_en = app.add_subcommand("enumerate", "exhaustive diagram enumeration (n = 2)");
    c_en->add_option("--p", en_p, "odd prime")->required();
    c_en->add_option("--ranks", ranks_str, "per-level rank caps d1,d2")->required();

    CLI::App* c_b = app.add_subcommand("bounds", "closed-form bound evaluators");
    c_b->add_option("--formula", formula,
                    "thmA|thmB1|thmB2proof|counting|countingref|fixedpart|rosen|rescores3|adhoc")
        ->required();
    c_b->add_option("--params", params, "comma-separated k=v list (colon lists, e.g. d=1:1)");

    CLI::App* c_v = app.add_subcommand("verify", "run the full invariant suite");

    // global flags are accepted after the subcommand as well
    for (CLI::App* sub : {c_coh, c_diag, c_dec, c_ext, c_en, c_b, c_v}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (c_coh->parsed())
        return run_over_files(opt, "cohomology", files, [&](zpl_lattice* L, char** out, char** dg) {
            return zpl_report_cohomology(L, level, out, dg);
        });
    if (c_diag->parsed())
        return run_over_files(opt, "diagram", files, [&](zpl_lattice* L, char** out, char** dg) {
            return zpl_report_pipeline(L, out, dg);
        });
    if (c_dec->parsed())
        return run_over_files(opt, "decompose", files, [&](zpl_lattice* L, char** out, char** dg) {
            return zpl_report_decompose(L, group_level, reference.empty() ? nullptr : reference.c_str(),
                                        out, dg);
        });
    if (c_ext->parsed()) {
        char *out = nullptr, *diag = nullptr;
        zpl_status s = zpl_report_ext(ext_p, modp2 ? 1 : 0, &out, &diag);
        return emit_single(opt, "ext-p" + std::to_string(ext_p) + (modp2 ? "-modp2" : ""), s, out,
                           diag);
    }
    if (c_en->parsed()) {
        std::vector<long> ranks;
        std::string cur;
        for (std::size_t i = 0; i <= ranks_str.size(); ++i) {
            if (i == ranks_str.size() || ranks_str[i] == ',') {
                if (!cur.empty()) ranks.push_back(std::stol(cur));
                cur.clear();
            } else {
                cur.push_back(ranks_str[i]);
            }
        }
        char *out = nullptr, *diag = nullptr;
        zpl_status s =
            zpl_report_enumerate(en_p, ranks.data(), ranks.size(), opt.cap, &out, &diag);
        std::string name = "enumerate-p" + std::to_string(en_p);
        for (long d : ranks) name += "-" + std::to_string(d);
        return emit_single(opt, name, s, out, diag);
    }
    if (c_b->parsed()) {
        char *out = nullptr, *diag = nullptr;
        zpl_status s = zpl_report_bounds(formula.c_str(), params.c_str(), &out, &diag);
        return emit_single(opt, "bounds-" + formula, s, out, diag);
    }
    if (c_v->parsed()) {
        char *out = nullptr, *diag = nullptr;
        zpl_status s = zpl_report_verify(opt.seed, opt.cap, &out, &diag);
        return emit_single(opt, "verify-seed" + std::to_string(opt.seed), s, out, diag);
    }
    return 1;
}
