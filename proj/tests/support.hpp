#pragma once

#include <fstream>
#include <sstream>
#include <string>

#ifndef MVA_DATA_DIR
#define MVA_DATA_DIR "."
#endif

inline std::string data_dir()
{
    return MVA_DATA_DIR;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture(const std::string& name)
{
    return read_file(data_dir() + "/fixtures/" + name);
}
