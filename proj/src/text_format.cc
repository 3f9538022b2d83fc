/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <zsschur/text_format.hh>

#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

using std::istream;
using std::ostream;
using std::string;
using std::vector;

namespace zsschur
{
    namespace
    {
        auto split_ints(const string & line, int line_no) -> vector<long long>
        {
            vector<long long> result;
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                    ++pos;
                if (pos == line.size())
                    break;
                long long v = 0;
                auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
                if (ec != std::errc{} || (end != line.data() + line.size() && *end != ' ' && *end != '\t' && *end != '\r'))
                    throw ParseError{"line " + std::to_string(line_no) + ": expected base-10 integers"};
                result.push_back(v);
                pos = end - line.data();
            }
            return result;
        }

        auto is_blank(const string & line) -> bool
        {
            return line.find_first_not_of(" \t\r") == string::npos;
        }
    }

    auto read_coloring(istream & in) -> ColoringFile
    {
        vector<std::pair<int, string>> lines;
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.starts_with("#") || is_blank(line))
                continue;
            lines.emplace_back(line_no, line);
        }

        if (lines.empty())
            throw ParseError{"missing 'n k r' header"};

        auto header = split_ints(lines[0].second, lines[0].first);
        if (header.size() != 3)
            throw ParseError{"line " + std::to_string(lines[0].first) + ": header must be exactly 'n k r'"};
        auto [n, k, r] = std::tuple{header[0], header[1], header[2]};
        if (n < 0 || n > 100'000'000)
            throw ParseError{"header: n out of range"};
        if (k < 3)
            throw ParseError{"header: k must be at least 3"};
        if (r < 2 || r > 1'000'000)
            throw ParseError{"header: r must be at least 2"};

        vector<long long> values;
        if (lines.size() >= 2)
            values = split_ints(lines[1].second, lines[1].first);
        if (lines.size() > 2)
            throw ParseError{"line " + std::to_string(lines[2].first) + ": unexpected content after the colour line"};
        if (values.size() != static_cast<std::size_t>(n))
            throw ParseError{"expected " + std::to_string(n) + " colours, found " + std::to_string(values.size())};

        vector<int> colours;
        colours.reserve(values.size());
        for (std::size_t i = 0 ; i < values.size() ; ++i) {
            if (values[i] < 0 || values[i] >= r)
                throw ParseError{"colour of " + std::to_string(i + 1) + " is outside [0, r-1]"};
            colours.push_back(static_cast<int>(values[i]));
        }

        return ColoringFile{static_cast<int>(k), Coloring{static_cast<int>(r), std::move(colours)}};
    }

    auto read_coloring_file(const string & path) -> ColoringFile
    {
        std::ifstream in{path};
        if (! in)
            throw ParseError{"cannot open '" + path + "'"};
        return read_coloring(in);
    }

    auto write_coloring(ostream & out, const Coloring & chi, int k) -> void
    {
        out << chi.n() << ' ' << k << ' ' << chi.r() << '\n';
        bool first = true;
        for (int c : chi.values()) {
            if (! first)
                out << ' ';
            out << c;
            first = false;
        }
        out << '\n';
    }

    auto write_coloring_file(const string & path, const Coloring & chi, int k) -> void
    {
        std::ofstream out{path};
        if (! out)
            throw ParseError{"cannot write '" + path + "'"};
        write_coloring(out, chi, k);
        if (! out)
            throw ParseError{"error writing '" + path + "'"};
    }

    auto format_witness(const Witness & w) -> string
    {
        std::ostringstream s;
        s << "WITNESS target= " << w.target << " parts=";
        for (int p : w.parts)
            s << ' ' << p;
        return s.str();
    }

    auto parse_witness(const string & line) -> Witness
    {
        std::istringstream s{line};
        string tag, target_key, parts_key;
        int target = 0;
        if (! (s >> tag >> target_key >> target >> parts_key) || tag != "WITNESS" || target_key != "target=" || parts_key != "parts=")
            throw ParseError{"malformed witness line"};
        vector<int> parts;
        int p;
        while (s >> p)
            parts.push_back(p);
        if (! s.eof())
            throw ParseError{"malformed witness parts"};
        return Witness{std::move(parts), target};
    }
}
