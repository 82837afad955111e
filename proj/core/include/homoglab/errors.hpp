#pragma once

#include <stdexcept>
#include <string>

namespace homoglab
{
    /// Base class of every error raised by the library.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Out-of-range vertex index, malformed set, or unparsable input.
    class InvalidInput : public Error
    {
        public:
            using Error::Error;
    };

    /// Directory-dependent operations need a graph with at least one edge.
    class StarNumberZero : public Error
    {
        public:
            using Error::Error;
    };

    /// The supplied base set is not an independent dominating set.
    class NotADirectoryBase : public Error
    {
        public:
            using Error::Error;
    };

    /// A vertex outside the directory has no neighbour in it.
    class Undominated : public Error
    {
        public:
            using Error::Error;
    };

    /// Graph order exceeds the limit of an exhaustive procedure.
    class OrderTooLarge : public Error
    {
        public:
            using Error::Error;
    };

    /// Partial map with a repeated source or an out-of-range pair.
    class MalformedSeed : public Error
    {
        public:
            using Error::Error;
    };

    class SeedNotLocalMorphism : public Error
    {
        public:
            using Error::Error;
    };

    /// Unknown presentation family or invalid family parameters.
    class BadParams : public Error
    {
        public:
            using Error::Error;
    };
}
