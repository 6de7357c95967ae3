#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arpaint/harness.hpp"

namespace {

const std::map<std::string, arpaint::InpaintMethod> kMethods = {
    {"extrapolation", arpaint::InpaintMethod::ExtrapolationCrossfade},
    {"gapwise", arpaint::InpaintMethod::JanssenGapWise},
    {"framewise", arpaint::InpaintMethod::JanssenFrameWise},
};

const std::map<std::string, arpaint::Estimator> kEstimators = {
    {"lpc", arpaint::Estimator::Lpc},
    {"burg", arpaint::Estimator::Burg},
};

const std::map<std::string, arpaint::WindowShape> kWindows = {
    {"hann", arpaint::WindowShape::Hann},
    {"rect", arpaint::WindowShape::Rectangular},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Autoregressive audio gap inpainting"};
    app.require_subcommand(1);

    // degrade
    std::string deg_input, deg_out_wav, deg_out_mask;
    arpaint::DegradeOptions deg;
    auto* degrade = app.add_subcommand("degrade", "Punch seeded gaps into a signal");
    degrade->add_option("input", deg_input, "Input WAV")->required();
    degrade->add_option("--gap-ms", deg.gap_length_ms, "Gap length in milliseconds")
        ->capture_default_str();
    degrade->add_option("--count", deg.count, "Number of gaps")->capture_default_str();
    degrade->add_option("--seed", deg.seed, "Placement seed")->capture_default_str();
    degrade->add_option("--min-separation", deg.min_separation,
                        "Minimum reliable samples between gaps")
        ->capture_default_str();
    degrade->add_option("--border", deg.border, "Gap-free samples at each signal end")
        ->capture_default_str();
    degrade->add_flag("--downmix", deg.downmix, "Average multi-channel input to mono");
    degrade->add_option("--out-wav", deg_out_wav, "Degraded WAV (gaps zeroed)")->required();
    degrade->add_option("--out-mask", deg_out_mask, "Mask file")->required();

    // inpaint
    std::string inp_input, inp_mask, inp_out;
    arpaint::InpaintConfig config;
    bool inp_downmix = false, contexts_only = false;
    std::size_t order_opt = 0;
    auto* inpaint = app.add_subcommand("inpaint", "Reconstruct the gaps of a masked signal");
    inpaint->add_option("input", inp_input, "Input WAV (gap samples are ignored)")->required();
    inpaint->add_option("--mask", inp_mask, "Mask file")->required();
    inpaint->add_option("--method", config.method, "Inpainting method")
        ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case))
        ->capture_default_str();
    inpaint->add_option("--estimator", config.estimator, "AR estimator")
        ->transform(CLI::CheckedTransformer(kEstimators, CLI::ignore_case))
        ->capture_default_str();
    auto* order_flag = inpaint->add_option(
        "--order", order_opt,
        "Model order p (default 2048 for extrapolation/gapwise, 1024 for framewise "
        "hann, 512 for framewise rect)");
    inpaint->add_option("--context", config.context_length,
                        "Context samples per gap side (extrapolation, gapwise)")
        ->capture_default_str();
    inpaint->add_option("--frame", config.frame_length, "Frame length (framewise)")
        ->capture_default_str();
    auto* window_flag = inpaint->add_option("--window", config.window,
                                            "Analysis window (framewise only)")
                            ->transform(CLI::CheckedTransformer(kWindows, CLI::ignore_case));
    inpaint->add_option("--hop", config.hop, "Frame hop (0 = frame/2)")->capture_default_str();
    inpaint->add_option("--max-iterations", config.janssen.max_iterations,
                        "Janssen iteration cap")
        ->capture_default_str();
    inpaint->add_option("--tolerance", config.janssen.rel_tolerance,
                        "Janssen relative-change stop tolerance")
        ->capture_default_str();
    inpaint->add_flag("--contexts-only", contexts_only,
                      "Estimate the model from reliable runs only");
    inpaint->add_flag("--downmix", inp_downmix, "Average multi-channel input to mono");
    inpaint->add_option("--out", inp_out, "Output WAV")->required();

    // evaluate
    std::string eval_ref, eval_est, eval_mask, eval_csv;
    auto* evaluate = app.add_subcommand("evaluate", "Gap-restricted SDR of a reconstruction");
    evaluate->add_option("reference", eval_ref, "Reference WAV")->required();
    evaluate->add_option("estimate", eval_est, "Reconstructed WAV")->required();
    evaluate->add_option("--mask", eval_mask, "Mask file")->required();
    evaluate->add_option("--out-csv", eval_csv, "Also write per-gap rows as CSV");

    // sweep
    arpaint::SweepSpec spec;
    std::vector<std::string> sw_methods = {"extrapolation", "gapwise", "framewise"};
    std::vector<std::string> sw_estimators = {"burg"};
    std::vector<std::string> sw_windows = {"hann", "rect"};
    spec.orders = {256};
    spec.gap_lengths_ms = {10, 20, 30, 40, 50, 60, 70, 80};
    auto* sweep = app.add_subcommand("sweep", "Degrade/inpaint/evaluate grid over a corpus");
    sweep->add_option("--corpus", spec.corpus_dir, "Directory of WAV files")->required();
    sweep->add_option("--out", spec.output_csv, "Results CSV")->required();
    sweep->add_option("--methods", sw_methods, "Methods to run")->delimiter(',');
    sweep->add_option("--estimators", sw_estimators, "Estimators to run")->delimiter(',');
    sweep->add_option("--orders", spec.orders, "Model orders to run")->delimiter(',');
    sweep->add_option("--gap-lengths", spec.gap_lengths_ms, "Gap lengths in ms")
        ->delimiter(',');
    sweep->add_option("--windows", sw_windows, "Windows for framewise")->delimiter(',');
    sweep->add_option("--context", spec.context_length, "Context samples per gap side")
        ->capture_default_str();
    sweep->add_option("--frame", spec.frame_length, "Frame length")->capture_default_str();
    sweep->add_option("--count", spec.gap_count, "Gaps per signal")->capture_default_str();
    sweep->add_option("--seed", spec.seed, "Sweep seed")->capture_default_str();
    sweep->add_option("--min-separation", spec.min_separation,
                      "Minimum reliable samples between gaps")
        ->capture_default_str();
    sweep->add_option("--border", spec.border, "Gap-free samples at each signal end")
        ->capture_default_str();
    sweep->add_option("--max-iterations", spec.max_iterations, "Janssen iteration cap")
        ->capture_default_str();
    sweep->add_option("--tolerance", spec.rel_tolerance, "Janssen stop tolerance")
        ->capture_default_str();
    sweep->add_option("--jobs", spec.jobs, "Worker threads")->capture_default_str();
    sweep->add_flag("--timings", spec.record_timings,
                    "Record wall-clock times (breaks rerun byte-identity)");
    sweep->add_flag("--downmix", spec.downmix, "Average multi-channel inputs to mono");

    CLI11_PARSE(app, argc, argv);

    try {
        if (degrade->parsed()) {
            arpaint::cmd_degrade(deg_input, deg, deg_out_wav, deg_out_mask);
        } else if (inpaint->parsed()) {
            if (window_flag->count() > 0 &&
                config.method != arpaint::InpaintMethod::JanssenFrameWise) {
                std::cerr << "arpaint: --window applies to the framewise method only\n";
                return 2;
            }
            if (order_flag->count() > 0) {
                config.order = order_opt;
            } else if (config.method == arpaint::InpaintMethod::JanssenFrameWise) {
                config.order = config.window == arpaint::WindowShape::Hann ? 1024 : 512;
            } else {
                config.order = 2048;
            }
            config.janssen.contexts_only = contexts_only;
            arpaint::cmd_inpaint(inp_input, inp_mask, config, inp_out, &std::cerr,
                                 inp_downmix);
        } else if (evaluate->parsed()) {
            arpaint::cmd_evaluate(eval_ref, eval_est, eval_mask, eval_csv, &std::cout);
        } else if (sweep->parsed()) {
            spec.methods.clear();
            for (const auto& m : sw_methods) spec.methods.push_back(kMethods.at(m));
            spec.estimators.clear();
            for (const auto& e : sw_estimators) spec.estimators.push_back(kEstimators.at(e));
            spec.windows.clear();
            for (const auto& w : sw_windows) spec.windows.push_back(kWindows.at(w));
            arpaint::cmd_sweep(spec, &std::cerr);
        }
    } catch (const std::out_of_range&) {
        std::cerr << "arpaint: unknown method/estimator/window name\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "arpaint: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
