/*
   Copyright 2026 The primefourier Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

using namespace primefourier;

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of Fourier uncertainty on Z/pZ"};
    app.require_subcommand(1);

    cli::RunConfig cfg;
    std::string a_text, b_text, exponents_text, coefficients_text;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "prime modulus")->required();
        sub->add_option("--seed", cfg.seed, "seed for random combinations")->capture_default_str();
        sub->add_option("--format", cfg.format, "json | csv | text")->capture_default_str();
        sub->add_option("--retries", cfg.retries, "combination attempts")->capture_default_str();
    };

    auto* certify = app.add_subcommand("certify", "exhaustive minor, tightness and achievability sweep");
    common(certify);
    certify->add_option("--budget", cfg.budget, "largest p accepted for the sweep")->capture_default_str();
    certify->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();

    auto* construct = app.add_subcommand("construct", "build f with supp f = A and supp f^ = B");
    common(construct);
    construct->add_option("--a", a_text, "comma-separated residues")->required();
    construct->add_option("--b", b_text, "comma-separated residues")->required();

    auto* sparse = app.add_subcommand("sparse", "zeros of a sparse polynomial at p-th roots of unity");
    common(sparse);
    sparse->add_option("--exponents", exponents_text, "comma-separated exponents")->required();
    sparse->add_option("--coefficients", coefficients_text,
                       "comma-separated coefficients (rationals or canonical w-polynomials)")
        ->required();

    auto* sum = app.add_subcommand("sumset", "Cauchy-Davenport check for A + B");
    common(sum);
    sum->add_option("--a", a_text, "comma-separated residues")->required();
    sum->add_option("--b", b_text, "comma-separated residues")->required();
    sum->add_flag("--witness", cfg.witness, "replay the convolution proof");

    auto* mesh = app.add_subcommand("meshulam", "support bound on (Z/pZ)^n");
    common(mesh);
    mesh->add_option("--n", cfg.n, "dimension")->required();
    mesh->add_option("--values", cfg.values_file, "file of 'x1,...,xn: value' lines")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_code(cli::Status::precondition_error);
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cli::Report report;
    try {
        cfg.max_p = cli::max_p_from_env();
        cfg.a = cli::parse_residue_list(a_text);
        cfg.b = cli::parse_residue_list(b_text);
        cfg.exponents = cli::parse_residue_list(exponents_text);
        cfg.coefficients = cli::split_list(coefficients_text);
        report = cli::run(cfg);
    } catch (const precondition_error& e) {
        report.command = cfg.command;
        report.status = cli::Status::precondition_error;
        report.error = e.what();
        report.result = nullptr;
        report.config = cli::detail::config_json(cfg);
    }
    std::cout << cli::render(report, cfg.format);
    return cli::exit_code(report.status);
}
