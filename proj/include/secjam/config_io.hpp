/**
 * \file secjam/config_io.hpp
 *
 * \brief Text format for SystemConfig.
 *
 * Grammar, one record per line:
 *
 *     # comment (also allowed after a record)
 *     <sigma2_sd> <sigma2_se> <alpha>     one line per pair, in pair order
 *     symmetric <N> <MER>                 shorthand; must be the only record
 *
 * Blank lines are ignored. Numbers use '.' as the decimal separator.
 */

#ifndef SECJAM_CONFIG_IO_HPP
#define SECJAM_CONFIG_IO_HPP

#include <secjam/model.hpp>

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <locale>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace secjam {

class ConfigParseError : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<std::string> split_fields(std::string_view line)
{
	std::vector<std::string> fields;
	std::size_t pos = 0;
	while (pos < line.size())
	{
		while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
		{
			++pos;
		}
		std::size_t const start = pos;
		while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
		{
			++pos;
		}
		if (pos > start)
		{
			fields.emplace_back(line.substr(start, pos - start));
		}
	}
	return fields;
}

inline double parse_real(std::string const& text, std::size_t line_no)
{
	std::istringstream in(text);
	in.imbue(std::locale::classic());
	double value = 0.0;
	in >> value;
	if (in.fail() || !in.eof())
	{
		throw ConfigParseError("line " + std::to_string(line_no) + ": '" + text + "' is not a number");
	}
	return value;
}

inline std::size_t parse_count(std::string_view text, std::size_t line_no)
{
	std::size_t value = 0;
	auto const* end = text.data() + text.size();
	auto const [ptr, ec] = std::from_chars(text.data(), end, value);
	if (text.empty() || ec != std::errc{} || ptr != end)
	{
		throw ConfigParseError("line " + std::to_string(line_no) + ": '" + std::string(text) + "' is not a pair count");
	}
	return value;
}

} // namespace detail

/// Parses and validates; throws ConfigParseError with the offending line.
[[nodiscard]] inline SystemConfig parse_config(std::istream& in)
{
	SystemConfig config;
	bool symmetric = false;
	std::string line;
	std::size_t line_no = 0;
	while (std::getline(in, line))
	{
		++line_no;
		if (auto hash = line.find('#'); hash != std::string::npos)
		{
			line.erase(hash);
		}
		auto const fields = detail::split_fields(line);
		if (fields.empty())
		{
			continue;
		}
		if (symmetric)
		{
			throw ConfigParseError("line " + std::to_string(line_no) + ": 'symmetric' must be the only record");
		}
		if (fields[0] == "symmetric")
		{
			if (!config.pairs.empty())
			{
				throw ConfigParseError("line " + std::to_string(line_no) + ": 'symmetric' must be the only record");
			}
			if (fields.size() != 3)
			{
				throw ConfigParseError("line " + std::to_string(line_no) + ": expected 'symmetric <N> <MER>'");
			}
			std::size_t const n = detail::parse_count(fields[1], line_no);
			double const mer = detail::parse_real(fields[2], line_no);
			try
			{
				config = make_symmetric_config(n, mer);
			}
			catch (std::invalid_argument const& e)
			{
				throw ConfigParseError("line " + std::to_string(line_no) + ": " + e.what());
			}
			symmetric = true;
			continue;
		}
		if (fields.size() != 3)
		{
			throw ConfigParseError("line " + std::to_string(line_no) + ": expected '<sd_gain> <se_gain> <alpha>'");
		}
		config.pairs.push_back({detail::parse_real(fields[0], line_no), detail::parse_real(fields[1], line_no), detail::parse_real(fields[2], line_no)});
	}
	if (auto violation = validate(config))
	{
		throw ConfigParseError("config: " + *violation);
	}
	return config;
}

[[nodiscard]] inline SystemConfig parse_config(std::string const& text)
{
	std::istringstream in(text);
	return parse_config(in);
}

[[nodiscard]] inline SystemConfig load_config(std::string const& path)
{
	std::ifstream in(path);
	if (!in)
	{
		throw std::runtime_error("cannot open config file '" + path + "'");
	}
	return parse_config(in);
}

/// Writes one pair per line; parse_config(format_config(c)) == c.
[[nodiscard]] inline std::string format_config(SystemConfig const& config)
{
	std::ostringstream out;
	out.imbue(std::locale::classic());
	out.precision(17);
	out << "# sd_gain se_gain alpha\n";
	for (auto const& p : config.pairs)
	{
		out << p.sigma2_sd << ' ' << p.sigma2_se << ' ' << p.alpha << '\n';
	}
	return out.str();
}

} // namespace secjam

#endif // SECJAM_CONFIG_IO_HPP
