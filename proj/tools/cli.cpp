#include "cli.hpp"

#include "shellkit/complex.hpp"
#include "shellkit/error.hpp"
#include "shellkit/generators.hpp"
#include "shellkit/oracle.hpp"
#include "shellkit/peelings.hpp"
#include "shellkit/poset.hpp"
#include "shellkit/search.hpp"
#include "shellkit/shelling.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

namespace shellkit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Flags
{
	std::string file;
	bool text = false;
	int threads = 1;
	bool verbose = false;
	bool maximalize = false;
	bool json_input = false;
	bool oracle = false;
	bool table = false;
	bool stats = false;
	bool facets = false;
	bool arbitrary = false;
	std::uint64_t limit = 0;
};

/// Raised for problems the user fixes by changing the command line.
struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// Raised when --oracle disagrees with the main computation.
struct OracleMismatch : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

class PhaseTimer
{
public:
	void start() { begin_ = std::chrono::steady_clock::now(); }
	void stop(const std::string& phase)
	{
		const auto d = std::chrono::steady_clock::now() - begin_;
		timing_[phase] = std::chrono::duration<double, std::milli>(d).count();
	}
	const Json& json() const { return timing_; }

private:
	std::chrono::steady_clock::time_point begin_;
	Json timing_ = Json::object();
};

std::string sha256_hex(const std::string& bytes)
{
	unsigned char digest[EVP_MAX_MD_SIZE];
	unsigned int len = 0;
	EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
	std::ostringstream hex;
	for (unsigned int i = 0; i < len; ++i) {
		hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
	}
	return "sha256:" + hex.str();
}

struct Input
{
	std::string bytes;
	bool json = false;
};

Input read_input(const std::string& path, bool force_json, std::istream& in)
{
	Input input;
	std::ostringstream buf;
	if (path == "-") {
		buf << in.rdbuf();
	} else {
		std::ifstream f(path, std::ios::binary);
		if (!f) {
			throw UsageError("cannot open '" + path + "'");
		}
		buf << f.rdbuf();
	}
	input.bytes = buf.str();
	input.json = force_json || (path.size() >= 5 && path.ends_with(".json"));
	return input;
}

FacetFamily load_family(const Input& input, FamilyMode mode, const Flags& flags)
{
	ParseOptions opts;
	opts.mode = mode;
	opts.json = input.json;
	opts.maximalize = flags.maximalize;
	return parse_facets(input.bytes, opts);
}

Json index_list(IndexSubset s)
{
	Json a = Json::array();
	for (int i : s) {
		a.push_back(i + 1);
	}
	return a;
}

Json count_list(const std::vector<BigCount>& counts)
{
	Json a = Json::array();
	for (const auto& c : counts) {
		a.push_back(to_decimal(c));
	}
	return a;
}

Json base_report(const std::string& command, const std::vector<std::string>& args, const std::string& digest)
{
	Json j;
	j["command"] = command;
	Json flags = Json::array();
	for (const auto& a : args) {
		flags.push_back(a);
	}
	j["args"] = flags;
	if (!digest.empty()) {
		j["inputDigest"] = digest;
	}
	return j;
}

CountOptions count_options(const Flags& flags, std::ostream& err)
{
	CountOptions opts;
	opts.threads = flags.threads;
	if (flags.verbose) {
		opts.on_level = [&err](int level, std::size_t size) {
			err << "level " << level << ": " << size << " setments\n";
		};
	}
	return opts;
}

void require_oracle_size(const FacetFamily& family)
{
	if (family.size() > 8) {
		throw UsageError("--oracle supports at most 8 facets, got " + std::to_string(family.size()));
	}
}

std::string render_word(const Word& w, const FacetFamily& family, bool as_facets)
{
	if (!as_facets) {
		return w.to_string();
	}
	std::string s;
	for (std::size_t i = 0; i < w.letters.size(); ++i) {
		if (i > 0) {
			s += " | ";
		}
		const auto toks = family.facet_tokens(w.letters[i]);
		for (std::size_t t = 0; t < toks.size(); ++t) {
			if (t > 0) {
				s += ' ';
			}
			s += toks[t];
		}
	}
	return s;
}

Json failures_json(const FailureReport& f, bool shelling)
{
	Json j;
	if (shelling) {
		j["type1"] = f.type1 ? index_list(*f.type1) : Json(nullptr);
		j["type2"] = f.type2;
		Json w = Json::array();
		for (auto [k, h] : f.type2_witnesses) {
			w.push_back({{"k", k + 1}, {"hooligan", h + 1}});
		}
		j["type2Witnesses"] = w;
	}
	j["type3"] = f.type3;
	j["type4"] = f.type4;
	return j;
}

void print_failures_text(std::ostream& out, const FailureReport& f, bool shelling)
{
	if (shelling) {
		out << "type1: " << (f.type1 ? f.type1->to_string() : std::string("none")) << '\n';
		out << "type2: " << (f.type2 ? "yes" : "no") << '\n';
	}
	out << "type3: " << (f.type3 ? "yes" : "no") << '\n';
	out << "type4: " << (f.type4 ? "yes" : "no") << '\n';
}

/// Shared pipeline behind analyze / pss / count / peel count.
struct Analysis
{
	std::optional<CopHooliganTable> table;
	std::optional<PssRowFamily> pss;
	LevelSummary levels;
	FailureReport failures;
};

PssRowFamily build_rows(const FacetFamily& family, bool shelling, const Flags& flags, PhaseTimer& timer,
                        std::optional<CopHooliganTable>& table)
{
	if (shelling) {
		timer.start();
		table = classify(family);
		timer.stop("classify");
		timer.start();
		PssRowFamily rows = pss_rows(*table, flags.threads);
		timer.stop("solve");
		return rows;
	}
	timer.start();
	PssRowFamily rows = peeling_pss_rows(family, flags.threads);
	timer.stop("solve");
	return rows;
}

Analysis analyze_family(const FacetFamily& family, bool shelling, const Flags& flags, PhaseTimer& timer,
                        std::ostream& err)
{
	Analysis a;
	a.pss = build_rows(family, shelling, flags, timer, a.table);
	timer.start();
	a.levels = rising_pass(*a.pss, count_options(flags, err));
	timer.stop("search");
	if (a.table) {
		a.failures.type1 = detect_type1(*a.table);
		const Type2Result t2 = detect_type2(*a.table);
		a.failures.type2 = t2.failed;
		a.failures.type2_witnesses = t2.witnesses;
	}
	a.failures.type3 = detect_type3(*a.pss);
	a.failures.max_partial_length = a.levels.max_partial_length;
	a.failures.type4 = a.levels.max_partial_length < family.size();
	return a;
}

void add_pss_totals(Json& j, const PssRowFamily& pss)
{
	j["pssTotal"] = to_decimal(pss.nonempty_pss_count());
	j["pssWithEmpty"] = to_decimal(pss.pss_count());
	j["rowTotal"] = pss.row_count();
}

// ---------------------------------------------------------------------------

int cmd_analyze(const Flags& flags, const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err)
{
	const Input input = read_input(flags.file, flags.json_input, in);
	const FacetFamily family = load_family(input, FamilyMode::Shelling, flags);
	PhaseTimer timer;
	const Analysis a = analyze_family(family, true, flags, timer, err);
	const CopHooliganTable& table = *a.table;

	if (flags.text) {
		out << "facets: " << family.size() << '\n';
		if (flags.table) {
			out << render_intersection_table(family, table);
		}
		for (int k = 0; k < family.size(); ++k) {
			out << "k=" << k + 1 << " cops=" << table[k].cops.to_string() << " policeable=";
			std::string sep;
			out << '{';
			for (const auto& p : table[k].policeable) {
				out << sep << p.hooligan + 1 << ':' << p.cops.to_string();
				sep = ",";
			}
			out << "} nonPoliceable=" << table[k].non_policeable.to_string() << '\n';
		}
		print_failures_text(out, a.failures, true);
		out << "maxPartialLength: " << a.failures.max_partial_length << '\n';
		return kOk;
	}

	Json j = base_report("analyze", args, sha256_hex(input.bytes));
	j["n"] = family.size();
	Json suffixes = Json::array();
	for (int k = 0; k < family.size(); ++k) {
		Json s;
		s["k"] = k + 1;
		s["cops"] = index_list(table[k].cops);
		s["hooligans"] = index_list(table[k].hooligans());
		Json pol = Json::array();
		for (const auto& p : table[k].policeable) {
			pol.push_back({{"hooligan", p.hooligan + 1}, {"cops", index_list(p.cops)}});
		}
		s["policeable"] = pol;
		s["nonPoliceable"] = index_list(table[k].non_policeable);
		suffixes.push_back(s);
	}
	j["suffixes"] = suffixes;
	j["failures"] = failures_json(a.failures, true);
	j["maxPartialLength"] = a.failures.max_partial_length;
	if (flags.table) {
		j["table"] = render_intersection_table(family, table);
	}
	j["timingMs"] = timer.json();
	out << j.dump() << '\n';
	return kOk;
}

int cmd_pss(const Flags& flags, const std::vector<std::string>& args, bool peel, std::istream& in, std::ostream& out)
{
	const Input input = read_input(flags.file, flags.json_input, in);
	const FacetFamily family = load_family(input, peel ? FamilyMode::Peeling : FamilyMode::Shelling, flags);
	PhaseTimer timer;
	std::optional<CopHooliganTable> table;
	const PssRowFamily pss = build_rows(family, !peel, flags, timer, table);
	const int n = family.size();

	if (flags.text) {
		out << "pssTotal: " << pss.nonempty_pss_count() << '\n';
		out << "pssWithEmpty: " << pss.pss_count() << '\n';
		out << "rowTotal: " << pss.row_count() << '\n';
		if (flags.stats) {
			for (int k = 0; k < n; ++k) {
				out << "k=" << k + 1 << " pss=" << pss.pss_count(k) << " rows=" << pss.rows(k).size() << '\n';
				for (const auto& r : pss.rows(k)) {
					out << "  " << to_pattern(r, n) << '\n';
				}
			}
		}
		return kOk;
	}
	Json j = base_report(peel ? "peel pss" : "pss", args, sha256_hex(input.bytes));
	j["n"] = n;
	add_pss_totals(j, pss);
	Json per = Json::array();
	for (int k = 0; k < n; ++k) {
		Json s;
		s["k"] = k + 1;
		s["pss"] = to_decimal(pss.pss_count(k));
		s["rows"] = pss.rows(k).size();
		if (flags.stats) {
			Json rows = Json::array();
			for (const auto& r : pss.rows(k)) {
				rows.push_back(to_pattern(r, n));
			}
			s["patterns"] = rows;
		}
		per.push_back(s);
	}
	j["suffixes"] = per;
	j["timingMs"] = timer.json();
	out << j.dump() << '\n';
	return kOk;
}

int cmd_count(const Flags& flags, const std::vector<std::string>& args, bool peel, std::istream& in,
              std::ostream& out, std::ostream& err)
{
	const Input input = read_input(flags.file, flags.json_input, in);
	const FacetFamily family = load_family(input, peel ? FamilyMode::Peeling : FamilyMode::Shelling, flags);
	if (flags.oracle) {
		require_oracle_size(family);
	}
	PhaseTimer timer;
	const Analysis a = analyze_family(family, !peel, flags, timer, err);

	if (flags.oracle) {
		const auto words = peel ? oracle::peelings_by_permutation(family) : oracle::shellings_by_permutation(family);
		if (BigCount(words.size()) != a.levels.count) {
			throw OracleMismatch("oracle found " + std::to_string(words.size()) + " words, level count is " +
			                     to_decimal(a.levels.count));
		}
	}

	if (flags.text) {
		out << "count: " << a.levels.count << '\n';
		out << "maxPartialLength: " << a.failures.max_partial_length << '\n';
		print_failures_text(out, a.failures, !peel);
		return kOk;
	}
	Json j = base_report(peel ? "peel count" : "count", args, sha256_hex(input.bytes));
	j["count"] = to_decimal(a.levels.count);
	j["maxPartialLength"] = a.failures.max_partial_length;
	j["failures"] = failures_json(a.failures, !peel);
	j["n"] = family.size();
	add_pss_totals(j, *a.pss);
	j["byLastLetter"] = count_list(a.levels.by_last_letter);
	if (flags.oracle) {
		j["oracle"] = "agree";
	}
	j["timingMs"] = timer.json();
	out << j.dump() << '\n';
	return kOk;
}

int cmd_enumerate(const Flags& flags, const std::vector<std::string>& args, bool peel, std::istream& in,
                  std::ostream& out)
{
	const Input input = read_input(flags.file, flags.json_input, in);
	const FacetFamily family = load_family(input, peel ? FamilyMode::Peeling : FamilyMode::Shelling, flags);
	if (flags.oracle) {
		require_oracle_size(family);
	}
	PhaseTimer timer;
	std::optional<CopHooliganTable> table;
	const PssRowFamily pss = build_rows(family, !peel, flags, timer, table);

	EnumerateOptions opts;
	if (flags.limit > 0) {
		opts.limit = flags.limit;
	}
	opts.order = flags.arbitrary ? EnumerationOrder::Arbitrary : EnumerationOrder::Lexicographic;
	opts.threads = flags.threads;

	std::set<Word> expected;
	if (flags.oracle) {
		const auto words = peel ? oracle::peelings_by_permutation(family) : oracle::shellings_by_permutation(family);
		expected.insert(words.begin(), words.end());
	}
	std::set<Word> seen;
	auto check = [&](const Word& w) {
		if (flags.oracle) {
			if (!expected.contains(w) || !seen.insert(w).second) {
				throw OracleMismatch("word " + w.to_string() + " rejected by the oracle");
			}
		}
	};

	Json words = Json::array();
	timer.start();
	const std::uint64_t emitted = for_each_full_word(
		pss,
		[&](const Word& w) {
			check(w);
			if (flags.text) {
				out << render_word(w, family, flags.facets) << '\n';
			} else {
				words.push_back(render_word(w, family, flags.facets));
			}
			return true;
		},
		opts);
	timer.stop("search");
	if (flags.oracle && flags.limit == 0 && seen.size() != expected.size()) {
		throw OracleMismatch("enumeration produced " + std::to_string(seen.size()) + " words, oracle " +
		                     std::to_string(expected.size()));
	}
	if (flags.text) {
		return kOk;
	}
	Json j = base_report(peel ? "peel enumerate" : "enumerate", args, sha256_hex(input.bytes));
	j["emitted"] = emitted;
	j["words"] = words;
	if (flags.oracle) {
		j["oracle"] = "agree";
	}
	j["timingMs"] = timer.json();
	out << j.dump() << '\n';
	return kOk;
}

int cmd_linext(const Flags& flags, const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err)
{
	const Input input = read_input(flags.file, false, in);
	const Poset poset = parse_poset(input.bytes);
	const FacetFamily ideals = poset_to_ideals(poset);
	if (flags.oracle && poset.size() > 8) {
		throw UsageError("--oracle supports at most 8 elements, got " + std::to_string(poset.size()));
	}
	PhaseTimer timer;
	const Analysis a = analyze_family(ideals, false, flags, timer, err);
	if (flags.oracle) {
		const std::uint64_t brute = oracle::linear_extensions_by_permutation(poset);
		if (BigCount(brute) != a.levels.count) {
			throw OracleMismatch("oracle found " + std::to_string(brute) + " linear extensions, level count is " +
			                     to_decimal(a.levels.count));
		}
	}
	if (flags.text) {
		out << "count: " << a.levels.count << '\n';
		return kOk;
	}
	Json j = base_report("linext", args, sha256_hex(input.bytes));
	j["count"] = to_decimal(a.levels.count);
	j["maxPartialLength"] = a.failures.max_partial_length;
	j["failures"] = failures_json(a.failures, false);
	j["n"] = poset.size();
	add_pss_totals(j, *a.pss);
	if (flags.oracle) {
		j["oracle"] = "agree";
	}
	j["timingMs"] = timer.json();
	out << j.dump() << '\n';
	return kOk;
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params, std::istream& in, std::ostream& out)
{
	auto ints = [&]() {
		std::vector<int> v;
		for (const auto& p : params) {
			try {
				std::size_t used = 0;
				v.push_back(std::stoi(p, &used));
				if (used != p.size()) {
					throw std::invalid_argument(p);
				}
			} catch (const std::logic_error&) {
				throw UsageError("expected an integer, got '" + p + "'");
			}
		}
		if (v.empty()) {
			throw UsageError("gen " + kind + " needs at least one number");
		}
		return v;
	};
	if (kind == "m2") {
		const auto v = ints();
		if (v.size() != 1) {
			throw UsageError("gen m2 takes exactly one number");
		}
		write_facets(out, gen_m2m(v[0]));
	} else if (kind == "pm") {
		write_facets(out, gen_partition_matroid(consecutive_blocks(ints())));
	} else if (kind == "cb") {
		write_facets(out, gen_chessboard(ChessboardShape{ints()}));
	} else if (kind == "trees") {
		if (params.size() != 1) {
			throw UsageError("gen trees takes one edge-list file, '-', or k<m>");
		}
		const std::string& src = params[0];
		std::vector<Edge> edges;
		if (src.size() >= 2 && (src[0] == 'k' || src[0] == 'K') &&
		    std::all_of(src.begin() + 1, src.end(), [](unsigned char c) { return std::isdigit(c); })) {
			edges = complete_graph(std::stoi(src.substr(1)));
		} else if (src == "-") {
			edges = parse_edge_list(in);
		} else {
			std::ifstream f(src);
			if (!f) {
				throw UsageError("cannot open '" + src + "'");
			}
			edges = parse_edge_list(f);
		}
		write_facets(out, gen_spanning_trees(edges));
	} else {
		throw UsageError("unknown generator '" + kind + "' (m2, pm, trees, cb)");
	}
	return kOk;
}

void add_common(CLI::App* cmd, Flags& flags, bool file = true)
{
	if (file) {
		cmd->add_option("file", flags.file, "Input file, '-' for standard input")->required();
	}
	cmd->add_flag("--text", flags.text, "Plain text instead of JSON");
	cmd->add_option("--threads", flags.threads, "Worker threads")->check(CLI::Range(1, 256));
	cmd->add_flag("--verbose", flags.verbose, "Report each DP level on standard error");
	cmd->add_flag("--json", flags.json_input, "Read the facet file as JSON");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Shellings, peelings and linear extensions via compressed PSS-posets", "shellkit"};
	app.require_subcommand(1);
	Flags flags;

	auto* analyze = app.add_subcommand("analyze", "Cops, hooligans and failure types of a complex");
	add_common(analyze, flags);
	analyze->add_flag("--table", flags.table, "Include the facet-intersection table");
	analyze->add_flag("--maximalize", flags.maximalize, "Drop non-maximal facets first");

	auto* pss = app.add_subcommand("pss", "Compressed PSS-poset of a complex");
	add_common(pss, flags);
	pss->add_flag("--stats", flags.stats, "Dump every 012e-row");
	pss->add_flag("--maximalize", flags.maximalize, "Drop non-maximal facets first");

	auto* count = app.add_subcommand("count", "Count all shellings");
	add_common(count, flags);
	count->add_flag("--oracle", flags.oracle, "Cross-check against all n! permutations (n <= 8)");
	count->add_flag("--maximalize", flags.maximalize, "Drop non-maximal facets first");

	auto* enumerate = app.add_subcommand("enumerate", "List all shellings");
	add_common(enumerate, flags);
	enumerate->add_option("--limit", flags.limit, "Stop after N words");
	enumerate->add_flag("--facets", flags.facets, "Print facet contents instead of indices");
	enumerate->add_flag("--arbitrary", flags.arbitrary, "Any expansion order");
	enumerate->add_flag("--oracle", flags.oracle, "Cross-check against all n! permutations (n <= 8)");
	enumerate->add_flag("--maximalize", flags.maximalize, "Drop non-maximal facets first");

	auto* peel = app.add_subcommand("peel", "Peelings of an arbitrary set family");
	peel->require_subcommand(1);
	auto* peel_count = peel->add_subcommand("count", "Count all peelings");
	add_common(peel_count, flags);
	peel_count->add_flag("--oracle", flags.oracle, "Cross-check against all n! permutations (n <= 8)");
	auto* peel_enum = peel->add_subcommand("enumerate", "List all peelings");
	add_common(peel_enum, flags);
	peel_enum->add_option("--limit", flags.limit, "Stop after N words");
	peel_enum->add_flag("--facets", flags.facets, "Print set contents instead of indices");
	peel_enum->add_flag("--arbitrary", flags.arbitrary, "Any expansion order");
	peel_enum->add_flag("--oracle", flags.oracle, "Cross-check against all n! permutations (n <= 8)");
	auto* peel_pss = peel->add_subcommand("pss", "Compressed PSS-poset of the peeling language");
	add_common(peel_pss, flags);
	peel_pss->add_flag("--stats", flags.stats, "Dump every 012e-row");

	auto* linext = app.add_subcommand("linext", "Count linear extensions of a poset");
	add_common(linext, flags);
	linext->add_flag("--oracle", flags.oracle, "Cross-check against all n! permutations (n <= 8)");

	auto* gen = app.add_subcommand("gen", "Emit a benchmark facet family");
	std::string gen_kind;
	std::vector<std::string> gen_params;
	gen->add_option("kind", gen_kind, "m2 | pm | trees | cb")->required();
	gen->add_option("params", gen_params, "Generator parameters")->required();

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? kOk : kUsageError;
	}

	try {
		if (analyze->parsed()) {
			return cmd_analyze(flags, args, in, out, err);
		}
		if (pss->parsed()) {
			return cmd_pss(flags, args, false, in, out);
		}
		if (count->parsed()) {
			return cmd_count(flags, args, false, in, out, err);
		}
		if (enumerate->parsed()) {
			return cmd_enumerate(flags, args, false, in, out);
		}
		if (peel_count->parsed()) {
			return cmd_count(flags, args, true, in, out, err);
		}
		if (peel_enum->parsed()) {
			return cmd_enumerate(flags, args, true, in, out);
		}
		if (peel_pss->parsed()) {
			return cmd_pss(flags, args, true, in, out);
		}
		if (linext->parsed()) {
			return cmd_linext(flags, args, in, out, err);
		}
		if (gen->parsed()) {
			return cmd_gen(gen_kind, gen_params, in, out);
		}
	} catch (const UsageError& e) {
		err << "error: " << e.what() << '\n';
		return kUsageError;
	} catch (const OracleMismatch& e) {
		err << "oracle mismatch: " << e.what() << '\n';
		return kDomainError;
	} catch (const Error& e) {
		err << "error: " << e.what() << '\n';
		return e.kind() == ErrorKind::Syntax ? kUsageError : kDomainError;
	}
	return kUsageError;
}

} // namespace shellkit::cli
