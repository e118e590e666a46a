# Management package for Django commands 